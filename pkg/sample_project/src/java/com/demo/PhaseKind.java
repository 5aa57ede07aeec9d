package com.demo;

public enum PhaseKind {
    WARMUP, STEADY, DRAIN;

    private int phaseBudget;

    int remainingBudget(int elapsedTicks) {
        int budgetLeft = phaseBudget - elapsedTicks;
        return budgetLeft;
    }
}
