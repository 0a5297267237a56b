package com.fix.r3;

public class OrderService {
    private final String name;

    public OrderService(String name) {
        this.name = name;
    }
}
