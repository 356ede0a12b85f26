package soc.chain.down;

public class Lower {
    public String text() {
        return "lower";
    }
}
