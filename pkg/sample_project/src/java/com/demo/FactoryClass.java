package com.demo;

public class FactoryClass {
    boolean isFirstFrame;
    private int frameCount;
    private String previousCaption;
    private AuthResult authResult;

    Object deepStub() {
        Object stubValue = null;
        return stubValue;
    }

    double lowerBoundaryFactor(double seedValue) {
        double boundaryFactor = seedValue * 0.5;
        return boundaryFactor;
    }
}
