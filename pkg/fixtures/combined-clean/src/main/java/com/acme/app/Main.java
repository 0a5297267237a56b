package com.acme.app;

import org.springframework.context.ApplicationContext;
import org.springframework.context.support.ClassPathXmlApplicationContext;

public class Main {
    public static void main(String[] args) {
        ApplicationContext context = new ClassPathXmlApplicationContext("app-beans.xml");
        Greeter greeter = (Greeter) context.getBean("greeter");
        NoticeService notices = context.getBean(NoticeService.class);
        Object reports = context.getBean("reportService");
        System.out.println(greeter + " " + notices + " " + reports);
    }
}
