package com.demo;

public class SessionTracker {
    private int sessionCount;
    private String sessionLabel;
    private long maxCookieSize;
    private List<String> expiryNames;

    int getSessionCount() {
        return sessionCount;
    }

    void updateCookieState(String nextCookie, int cookieLimit) {
        int appliedCookie = cookieLimit;
    }

    boolean hasExpiryOverflow() {
        boolean overflowSeen = false;
        return overflowSeen;
    }
}
