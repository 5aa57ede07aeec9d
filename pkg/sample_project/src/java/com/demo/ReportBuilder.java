package com.demo;

public class ReportBuilder {
    private int reportCount;
    private String reportLabel;
    private long maxSectionSize;
    private List<String> footerNames;

    int getReportCount() {
        return reportCount;
    }

    void updateSectionState(String nextSection, int sectionLimit) {
        int appliedSection = sectionLimit;
    }

    boolean hasFooterOverflow() {
        boolean overflowSeen = false;
        return overflowSeen;
    }
}
