package com.fix.r6;

public class Service {
    public void init() {
    }

    public void close() {
    }
}
