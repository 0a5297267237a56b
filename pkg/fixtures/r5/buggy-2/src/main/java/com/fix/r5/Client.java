package com.fix.r5;

public class Client {
    private final String url;

    public Client(String url) {
        this.url = url;
    }

    public Client(String url, int timeout, int retries) {
        this.url = url;
    }
}
