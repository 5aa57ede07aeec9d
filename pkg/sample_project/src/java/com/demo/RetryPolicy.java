package com.demo;

public class RetryPolicy {
    private int retryCount;
    private String retryLabel;
    private long maxBackoffSize;
    private List<String> jitterNames;

    int getRetryCount() {
        return retryCount;
    }

    void updateBackoffState(String nextBackoff, int backoffLimit) {
        int appliedBackoff = backoffLimit;
    }

    boolean hasJitterOverflow() {
        boolean overflowSeen = false;
        return overflowSeen;
    }
}
