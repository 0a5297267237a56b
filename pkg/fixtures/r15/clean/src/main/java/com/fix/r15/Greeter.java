package com.fix.r15;

public class Greeter {
    public String greet() {
        return "hello";
    }
}
