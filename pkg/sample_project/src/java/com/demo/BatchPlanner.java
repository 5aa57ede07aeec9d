package com.demo;

public class BatchPlanner {
    private int batchCount;
    private String batchLabel;
    private long maxWindowSize;
    private List<String> horizonNames;

    int getBatchCount() {
        return batchCount;
    }

    void updateWindowState(String nextWindow, int windowLimit) {
        int appliedWindow = windowLimit;
    }

    boolean hasHorizonOverflow() {
        boolean overflowSeen = false;
        return overflowSeen;
    }
}
