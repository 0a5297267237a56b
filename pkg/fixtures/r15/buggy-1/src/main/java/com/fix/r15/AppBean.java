package com.fix.r15;

public class AppBean {
    public void run() {
    }
}
