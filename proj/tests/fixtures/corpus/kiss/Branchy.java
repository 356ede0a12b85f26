package kiss;

// Fifteen decisions: cyclomatic complexity 16.
public class Branchy {
    public int grade(int v, String name) {
        int score = 0;
        boolean flag = v > 0;
        if (v > 2) {
            score += 2;
        }
        if (v < -5) {
            score -= 1;
        }
        if (v == 8) {
            return score;
        }
        if (v != 11) {
            score++;
        }
        if (v >= score) {
            score *= 2;
        }
        if (v <= 0) {
            score--;
        }
        if (v % 20 == 0) {
            score = score / 2;
        }
        if (flag) {
            score = -score;
        }
        if (!flag) {
            flag = true;
        }
        if (name.isEmpty()) {
            name = "blank";
        }
        if (name.length() > 32) {
            name = name.trim();
        }
        if (score > 1000) {
            throw new IllegalStateException("overflow");
        }
        if (name.startsWith("x")) {
            v = v << 1;
        }
        if (v > score) {
            v = score;
        }
        if (name.endsWith("!")) {
            flag = !flag;
        }
        return score;
    }
}
