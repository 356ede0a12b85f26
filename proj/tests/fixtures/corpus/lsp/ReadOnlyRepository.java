package lsp;

import java.sql.SQLException;

public class ReadOnlyRepository extends Repository {
    @Override
    public void save(String item) throws SQLException {
        if (item.isEmpty()) {
            throw new SQLException("read only");
        }
    }

    @Override
    public String load(String key) {
        throw new UnsupportedOperationException();
    }
}
