package com.fix.r3;

public class Notifier {
    private final String message;
    private final int retries;

    public Notifier(String message, int retries) {
        this.message = message;
        this.retries = retries;
    }
}
