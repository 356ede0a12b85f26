package soc.cycle.a;

import soc.cycle.b.Beta;

public class Alpha {
    public int size(Beta beta) {
        return beta.weight() + 1;
    }
}
