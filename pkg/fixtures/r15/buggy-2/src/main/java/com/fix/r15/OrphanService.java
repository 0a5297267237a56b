package com.fix.r15;

public class OrphanService {
    public void serve() {
    }
}
