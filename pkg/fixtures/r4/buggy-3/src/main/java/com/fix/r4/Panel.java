package com.fix.r4;

public class Panel {
    private final int width;
    private final int height;

    public Panel(int width, int height) {
        this.width = width;
        this.height = height;
    }
}
