package com.fix.r15;

import org.springframework.context.ApplicationContext;
import org.springframework.context.annotation.AnnotationConfigApplicationContext;

public class Main {
    public static void main(String[] args) {
        ApplicationContext context = new AnnotationConfigApplicationContext(AppCtx.class);
        Object service = context.getBean("beta");
        System.out.println(service);
    }
}
