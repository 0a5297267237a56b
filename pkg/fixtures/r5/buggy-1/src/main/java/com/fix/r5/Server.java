package com.fix.r5;

public class Server {
    private final String host;
    private final String name;

    public Server(String host, String name) {
        this.host = host;
        this.name = name;
    }
}
