package com.fix.r4;

public class MessageRenderer {
    private final InfoMessage message;

    public MessageRenderer(InfoMessage message) {
        this.message = message;
    }
}
