package ih;

public class Constants {
    public static final int MAX = 10;
    public static final String NAME = "constants";
    private int scale = 2;

    public int scaled(int v) {
        return v * scale;
    }
}
