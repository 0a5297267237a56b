package com.fix.r14;

import org.springframework.context.annotation.Configuration;
import org.springframework.context.annotation.ImportResource;

@Configuration
@ImportResource(location = {"classpath:my-bean.xml"})
public class AppConfig {
}
