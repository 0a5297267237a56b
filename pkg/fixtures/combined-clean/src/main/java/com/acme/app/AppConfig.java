package com.acme.app;

import org.springframework.context.annotation.Bean;
import org.springframework.context.annotation.Configuration;
import org.springframework.context.annotation.ImportResource;

@Configuration
@ImportResource(location = {"classpath:app-beans.xml"})
public class AppConfig {
    @Bean
    public ReportService reportService() {
        return new ReportService();
    }
}
