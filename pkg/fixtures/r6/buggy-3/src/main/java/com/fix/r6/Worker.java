package com.fix.r6;

public class Worker {
    public void init() {
    }
}
