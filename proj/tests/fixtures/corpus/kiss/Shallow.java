package kiss;

public class Shallow {
    public String walk(String[] parts) {
        StringBuilder out = new StringBuilder();
        try {
            for (String p : parts) {
                if (p != null) {
                    do {
                        out.append(p.charAt(0));
                        p = p.substring(1);
                    } while (p.length() > 0);
                }
            }
        } catch (RuntimeException e) {
            out.setLength(0);
        }
        return out.toString();
    }
}
