package com.acme.app;

public class InfoMessage {
    public String render() {
        return "info";
    }
}
