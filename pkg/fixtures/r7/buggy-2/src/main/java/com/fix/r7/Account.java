package com.fix.r7;

public class Account {
    private String ownerName;

    public void setOwnername(String value) {
        this.ownerName = value;
    }
}
