package com.fix.r8;

import java.util.Arrays;
import java.util.Collection;

import org.junit.Test;
import org.junit.runner.RunWith;
import org.junit.runners.Parameterized;
import org.junit.runners.Parameterized.Parameters;

@RunWith(Parameterized.class)
public class EngineTest {
    @Test
    public void checksSomething() {
    }

    private int helperValue() {
        return 3;
    }
}
