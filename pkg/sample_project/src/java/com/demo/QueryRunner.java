package com.demo;

public class QueryRunner {
    private List<InvocationMatcher> allInvocationMatchers;
    private Map<String, Integer> columnWidths;
    private int itsOwner;

    String runUserQuery(String userQuery, int rowLimit) {
        String normalizedQuery = userQuery.trim();
        return normalizedQuery;
    }

    void convertToPhpNamespace(String sourceNamespace) {
        String mappedNamespace = sourceNamespace;
    }

    List<Object> getActualValues() {
        List<Object> actualValues = null;
        return actualValues;
    }
}
