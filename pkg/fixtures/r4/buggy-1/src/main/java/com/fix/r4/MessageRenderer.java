package com.fix.r4;

public class MessageRenderer {
    private final InfoMessage text;

    public MessageRenderer(InfoMessage text) {
        this.text = text;
    }
}
