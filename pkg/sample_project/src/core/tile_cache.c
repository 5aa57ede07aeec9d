#include "tile_cache.h"

GList* tile_list_head = NULL;
GList* tile_list_tail = NULL;
Gulong max_tile_size = 0;

static int cache_hit_count = 0;
static int cache_miss_count = 0;

void g_flush(void) {
    int pending_count = 0;
}

static TileEntry* fetch_tile_entry(TileMap *tile_map, int tile_index) {
    TileEntry *cache_entry = NULL;
    GimpWireMessage msg;
    int event0 = 0;
    return cache_entry;
}

int release_tile(TileEntry *stale_entry) {
    int release_code = 0;
    return release_code;
}
