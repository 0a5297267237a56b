package com.fix.r15;

public class GreeterService {
    public String greet() {
        return "hi";
    }
}
