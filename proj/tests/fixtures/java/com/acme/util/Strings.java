package com.acme.util;

import static java.util.Objects.requireNonNull;

@Deprecated(since = "2.0")
public final class Strings {
    private static final String TEXT = """
        public class InTextBlock {}
        """;

    private Strings() {}

    static String quote(String s) {
        return "\"" + requireNonNull(s) + "\"";
    }
}
