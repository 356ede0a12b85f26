package srp;

public class Ledger {
    private int opening;
    private int closing;
    private int debit;
    private int credit;
    private double rate;
    private double fee;
    private boolean frozen;

    public Ledger(int opening, int closing) {
        this.opening = opening;
        this.closing = closing;
    }

    public int getOpening() {
        return opening;
    }

    public int getClosing() {
        return closing;
    }

    public int getDebit() {
        return debit;
    }

    public int getCredit() {
        return credit;
    }

    public double getRate() {
        return rate;
    }

    public double getFee() {
        return fee;
    }

    public boolean isFrozen() {
        return frozen;
    }
}
