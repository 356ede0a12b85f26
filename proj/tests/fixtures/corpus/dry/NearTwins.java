package dry;

public class NearTwins {
    public int countLong(String[] words) {
        int n = 0;
        for (int i = 0; i < words.length; i++) {
            if (words[i].length() > 7 && i > 0) {
                n += 1;
            }
        }
        return n;
    }

    public int countCodes(String[] codes) {
        int c = 0;
        for (int j = 0; j < codes.length; j++) {
            if (codes[j].length() > 3 && j > 1) {
                c += 1;
            }
        }
        return c;
    }
}
