package com.fix.r3;

public class Mailer {
    private final String host;
    private int port;

    public Mailer(String host) {
        this.host = host;
    }

    public Mailer(String host, int port) {
        this.host = host;
        this.port = port;
    }
}
