package com.fix.r1;

import org.springframework.context.ApplicationContext;
import org.springframework.context.support.ClassPathXmlApplicationContext;

public class Main {
    public static void main(String[] args) {
        ApplicationContext context = new ClassPathXmlApplicationContext("conf/app-context.xml");
        System.out.println(context.getDisplayName());
    }
}
