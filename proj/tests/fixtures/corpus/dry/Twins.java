package dry;

public class Twins {
    public int sumDoubled(int[] values) {
        int total = 0;
        for (int i = 0; i < values.length; i++) {
            if (values[i] > 0) {
                total = total + values[i] * 2;
            }
        }
        if (total > 100) {
            total = 100;
        }
        return total;
    }

    public int addTripled(int[] gains) {
        int sum = 0;
        for (int k = 0; k < gains.length; k++) {
            if (gains[k] > 0) {
                sum = sum + gains[k] * 3;
            }
        }
        if (sum > 500) {
            sum = 500;
        }
        return sum;
    }
}
