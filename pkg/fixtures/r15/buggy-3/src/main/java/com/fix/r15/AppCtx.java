package com.fix.r15;

import org.springframework.context.annotation.Bean;
import org.springframework.context.annotation.Configuration;

@Configuration
public class AppCtx {
    @Bean
    public GreeterService alpha() {
        return new GreeterService();
    }
}
