package srp;

public class GodClass {
    private int total;
    private int count;
    private String label;

    public GodClass(String label) {
        this.label = label;
    }

    public void post(int amount) {
        if (amount <= 0) {
            return;
        }
        for (int i = 0; i < amount; i++) {
            if (i % 2 == 0 && total > 0) {
                total = total + i;
            } else if (i % 3 == 0) {
                total = total - 1;
            }
        }
    }

    public int balance(int floor) {
        int result = total;
        while (result < floor) {
            result += 10;
        }
        if (result > 1000 || result < -1000) {
            result = 0;
        }
        return result > floor ? result : floor;
    }

    public void record(int value) {
        switch (value) {
            case 1:
                count = 0;
                break;
            case 2:
                count++;
                break;
            case 3:
                count += 2;
                break;
            default:
                count += value;
        }
        do {
            count--;
        } while (count > 100);
        try {
            classify(count);
        } catch (IllegalStateException e) {
            count = 0;
        }
        if (count < 0) {
            count = 0;
        }
    }

    public double average(int[] values) {
        if (values.length == 0 || count == 0) {
            return 0.0;
        }
        double sum = 0;
        for (int v : values) {
            sum += v;
        }
        return sum / count;
    }

    public String describe(boolean verbose) {
        if (verbose && label != null) {
            return label + " (" + classify(label.length()) + ")";
        }
        return label;
    }

    private int reconcile(Ledger l) {
        int diff = l.getClosing() - l.getOpening();
        if (diff == 0) {
            return 0;
        }
        if (l.getDebit() > l.getCredit()) {
            diff = diff - l.getDebit();
        } else {
            diff = diff + l.getCredit();
        }
        for (int i = 0; i < 3 && diff > 0; i++) {
            diff = diff / 2;
        }
        while (diff < -100 || diff > 100) {
            diff = diff % 100;
        }
        return diff < 0 ? -diff : diff;
    }

    private double settle(Ledger l) {
        if (l.isFrozen()) {
            return 0.0;
        }
        double amount = l.getFee() * l.getRate();
        int attempts = 0;
        do {
            attempts++;
            amount = amount * 0.9;
        } while (amount > 50.0 && attempts < 5);
        try {
            amount = amount + reconcile(l);
        } catch (ArithmeticException e) {
            amount = 0.0;
        } catch (IllegalArgumentException e) {
            amount = -1.0;
        }
        return amount >= 0 ? amount : 0.0;
    }

    private static String classify(int v) {
        if (v < 0) {
            return "negative";
        }
        if (v == 0) {
            return "zero";
        }
        if (v < 10) {
            return "small";
        }
        if (v < 100) {
            return "medium";
        }
        if (v < 1000 || v % 1000 == 0) {
            return "large";
        }
        return "huge";
    }
}
