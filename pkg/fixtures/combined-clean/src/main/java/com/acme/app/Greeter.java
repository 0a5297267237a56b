package com.acme.app;

public class Greeter {
    private final String message;
    private String prefix;

    public Greeter(String message) {
        this.message = message;
    }

    public void setPrefix(String prefix) {
        this.prefix = prefix;
    }

    public void init() {
    }

    public void close() {
    }
}
