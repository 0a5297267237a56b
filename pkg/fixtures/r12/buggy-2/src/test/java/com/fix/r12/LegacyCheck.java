package com.fix.r12;

public class LegacyCheck extends BaseCheck {
    public void recheck() {
    }
}
