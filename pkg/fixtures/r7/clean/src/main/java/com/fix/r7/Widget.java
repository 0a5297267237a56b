package com.fix.r7;

public class Widget {
    private String foo;
    private String bar;

    public void setFoo(String value) {
        this.foo = value;
    }

    public void setBar(String value) {
        this.bar = value;
    }
}
