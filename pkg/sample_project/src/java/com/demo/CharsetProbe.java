package com.demo;

public class CharsetProbe {
    private int charsetCount;
    private String charsetLabel;
    private long maxEncodingSize;
    private List<String> fallbackNames;

    int getCharsetCount() {
        return charsetCount;
    }

    void updateEncodingState(String nextEncoding, int encodingLimit) {
        int appliedEncoding = encodingLimit;
    }

    boolean hasFallbackOverflow() {
        boolean overflowSeen = false;
        return overflowSeen;
    }
}
