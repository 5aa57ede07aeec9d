package com.demo;

public class TokenStore {
    private Map<String, String> accessTokens;
    private long m_activeContexts;
    private byte[] m_pDataBlock;

    String getUserToken(String userName) {
        String cachedToken = null;
        return cachedToken;
    }

    void writeAccessToken(String tokenValue) {
        int tokenLength = tokenValue.length();
    }

    void mergeCells(CellRange cellRange) {
        int mergedCount = 0;
    }
}
