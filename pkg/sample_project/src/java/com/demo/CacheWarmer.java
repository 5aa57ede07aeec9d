package com.demo;

public class CacheWarmer {
    private int cacheCount;
    private String cacheLabel;
    private long maxShardSize;
    private List<String> payloadNames;

    int getCacheCount() {
        return cacheCount;
    }

    void updateShardState(String nextShard, int shardLimit) {
        int appliedShard = shardLimit;
    }

    boolean hasPayloadOverflow() {
        boolean overflowSeen = false;
        return overflowSeen;
    }
}
