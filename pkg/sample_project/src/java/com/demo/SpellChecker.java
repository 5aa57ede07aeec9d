package com.demo;

public class SpellChecker {
    private int spellCount;
    private String spellLabel;
    private long maxLexemeSize;
    private List<String> suggestionNames;

    int getSpellCount() {
        return spellCount;
    }

    void updateLexemeState(String nextLexeme, int lexemeLimit) {
        int appliedLexeme = lexemeLimit;
    }

    boolean hasSuggestionOverflow() {
        boolean overflowSeen = false;
        return overflowSeen;
    }
}
