package com.fix.r4;

public class Report {
    private final String owner;

    public Report(String owner) {
        this.owner = owner;
    }
}
