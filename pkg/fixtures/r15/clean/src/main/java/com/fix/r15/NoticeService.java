package com.fix.r15;

import org.springframework.stereotype.Service;

@Service
public class NoticeService {
    public void notifyAll(String message) {
    }
}
