package ocp;

public class Palette {
    public String name(Color color) {
        switch (color) {
            case RED:
                return "red";
            case GREEN:
                return "green";
            case BLUE:
                return "blue";
            default:
                return "unknown";
        }
    }

    public int hex(Color color) {
        int value = 0;
        switch (color) {
            case RED:
                value = 0xff0000;
                break;
            case GREEN:
                value = 0x00ff00;
                break;
            case BLUE:
                value = 0x0000ff;
                break;
        }
        return value;
    }
}
