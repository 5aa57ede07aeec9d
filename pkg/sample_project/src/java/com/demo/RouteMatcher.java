package com.demo;

public class RouteMatcher {
    private int routeCount;
    private String routeLabel;
    private long maxPatternSize;
    private List<String> captureNames;

    int getRouteCount() {
        return routeCount;
    }

    void updatePatternState(String nextPattern, int patternLimit) {
        int appliedPattern = patternLimit;
    }

    boolean hasCaptureOverflow() {
        boolean overflowSeen = false;
        return overflowSeen;
    }
}
