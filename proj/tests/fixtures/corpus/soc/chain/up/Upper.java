package soc.chain.up;

import soc.chain.down.Lower;

public class Upper {
    public String render(Lower lower) {
        return "<" + lower.text() + ">";
    }
}
