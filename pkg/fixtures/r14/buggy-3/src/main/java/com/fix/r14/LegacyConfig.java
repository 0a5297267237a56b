package com.fix.r14;

import org.springframework.context.annotation.Configuration;
import org.springframework.context.annotation.ImportResource;

@Configuration
@ImportResource(location = {"classpath:legacy/beans-old.xml"})
public class LegacyConfig {
}
