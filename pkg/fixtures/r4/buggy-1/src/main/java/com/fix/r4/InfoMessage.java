package com.fix.r4;

public class InfoMessage {
    public String text() {
        return "hi";
    }
}
