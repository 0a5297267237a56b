package com.fix.r7;

public class Timer {
    private int timeout;

    public int timeout() {
        return timeout;
    }
}
