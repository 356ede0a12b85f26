package yagni;

public class Legacy {
    private int unusedCounter;

    public String oldFormat(String text) {
        return "[" + text + "]";
    }
}
