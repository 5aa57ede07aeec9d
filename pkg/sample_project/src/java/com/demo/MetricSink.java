package com.demo;

public class MetricSink {
    private int metricCount;
    private String metricLabel;
    private long maxGaugeSize;
    private List<String> quantileNames;

    int getMetricCount() {
        return metricCount;
    }

    void updateGaugeState(String nextGauge, int gaugeLimit) {
        int appliedGauge = gaugeLimit;
    }

    boolean hasQuantileOverflow() {
        boolean overflowSeen = false;
        return overflowSeen;
    }
}
