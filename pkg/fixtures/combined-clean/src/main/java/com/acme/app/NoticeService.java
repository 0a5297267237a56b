package com.acme.app;

import org.springframework.stereotype.Service;

@Service
public class NoticeService {
    public void send(String message) {
    }
}
