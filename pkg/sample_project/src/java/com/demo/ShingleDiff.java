package com.demo;

public class ShingleDiff {
    private int maxShingleDiff;
    private int widthAndHeight;

    int getMaxShingleDiff() {
        return maxShingleDiff;
    }

    void splitIntoChunks(byte[] rawPayload, int chunkSize) {
        int chunkCount = rawPayload.length / chunkSize;
    }

    boolean checkAllInput(String theResult) {
        boolean inputValid = theResult != null;
        return inputValid;
    }
}
