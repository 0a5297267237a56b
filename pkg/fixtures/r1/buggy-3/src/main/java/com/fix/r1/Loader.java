package com.fix.r1;

import org.springframework.context.ApplicationContext;
import org.springframework.context.support.ClassPathXmlApplicationContext;

public class Loader {
    private static final ApplicationContext CTX = new ClassPathXmlApplicationContext("classpath:ctx.xml");

    public static ApplicationContext context() {
        return CTX;
    }
}
