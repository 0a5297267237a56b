package com.fix.r5;

public class Job {
    private final String name;

    public Job(String name) {
        this.name = name;
    }
}
