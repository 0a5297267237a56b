package com.fix.r10;

import org.junit.Test;

public class CoreTest {
    @Test
    public void runsCore() {
    }
}
