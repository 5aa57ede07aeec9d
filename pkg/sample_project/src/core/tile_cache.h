#ifndef TILE_CACHE_H
#define TILE_CACHE_H

typedef struct TileEntry {
    int tile_index;
    int ref_count;
    char pixel_data[4096];
} TileEntry;

int release_tile(TileEntry *stale_entry);

#endif
