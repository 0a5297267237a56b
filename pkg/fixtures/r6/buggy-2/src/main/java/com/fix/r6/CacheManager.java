package com.fix.r6;

public class CacheManager {
    public void shutdown() {
    }
}
