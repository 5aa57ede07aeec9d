package com.demo;

public class LayoutEngine {
    private int layoutCount;
    private String layoutLabel;
    private long maxMarginSize;
    private List<String> baselineNames;

    int getLayoutCount() {
        return layoutCount;
    }

    void updateMarginState(String nextMargin, int marginLimit) {
        int appliedMargin = marginLimit;
    }

    boolean hasBaselineOverflow() {
        boolean overflowSeen = false;
        return overflowSeen;
    }
}
