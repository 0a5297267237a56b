package com.acme.app;

public class ReportService {
    public String summary() {
        return "ok";
    }
}
