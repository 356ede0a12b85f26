package misc;

import java.util.ArrayList;
import java.util.List;
import java.util.function.Function;

@SuppressWarnings("unchecked")
public class Features<T extends Comparable<T>> {
    private final List<T> items = new ArrayList<>();

    static {
        System.setProperty("features", "on");
    }

    public void add(T item) {
        items.add(item);
    }

    public int mapped(Function<T, Integer> f) {
        int total = 0;
        for (T item : items) {
            total += f.apply(item);
        }
        return total;
    }

    public int lengths() {
        return mapped(item -> item.toString().length());
    }

    public Runnable task() {
        return new Runnable() {
            public void run() {
                System.out.println("run");
            }
        };
    }

    public static class Entry {
        private String key;

        public String key() {
            return key;
        }

        private static class Deeper {
        }
    }
}
