package com.fix.r15;

import org.springframework.context.ApplicationContext;
import org.springframework.context.support.ClassPathXmlApplicationContext;

public class Main {
    public static void main(String[] args) {
        ApplicationContext context = new ClassPathXmlApplicationContext("beans.xml");
        OrphanService orphan = context.getBean(OrphanService.class);
        System.out.println(orphan);
    }
}
