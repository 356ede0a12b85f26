package ocp;

public class Modes {
    public static final int ON = 1;
    public static final int OFF = 0;

    public String label(int mode) {
        switch (mode) {
            case ON:
                return "on";
            case OFF:
                return "off";
            default:
                return "?";
        }
    }

    public boolean active(int mode) {
        switch (mode) {
            case ON:
                return true;
            case OFF:
            default:
                return false;
        }
    }
}
