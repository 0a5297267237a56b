package com.fix.r14;

public class InfoMessage {
    public String text() {
        return "hello";
    }
}
