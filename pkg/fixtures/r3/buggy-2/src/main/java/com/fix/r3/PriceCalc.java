package com.fix.r3;

public class PriceCalc {
    private final int count;

    public PriceCalc(int count) {
        this.count = count;
    }
}
