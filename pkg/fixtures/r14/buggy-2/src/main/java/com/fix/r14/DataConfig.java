package com.fix.r14;

import org.springframework.context.annotation.Configuration;
import org.springframework.context.annotation.ImportResource;

@Configuration
@ImportResource(location = "conf/spring/data-ctx.xml")
public class DataConfig {
}
