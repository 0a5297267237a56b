package com.fix.r2;

public class Launcher {
    public void start() {
    }
}
