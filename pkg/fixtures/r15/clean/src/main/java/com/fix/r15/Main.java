package com.fix.r15;

import org.springframework.context.ApplicationContext;
import org.springframework.context.support.ClassPathXmlApplicationContext;

public class Main {
    public static void main(String[] args) {
        ApplicationContext context = new ClassPathXmlApplicationContext("beans.xml");
        Greeter greeter = (Greeter) context.getBean("greeter");
        NoticeService notices = context.getBean(NoticeService.class);
        String dynamicName = args[0];
        Object dynamic = context.getBean(dynamicName);
        System.out.println(greeter + " " + notices + " " + dynamic);
    }
}
