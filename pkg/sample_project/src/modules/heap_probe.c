static int heap_probe_count = 0;
static int heap_error_count = 0;
static HeapState current_heap_state;

int update_heap_probe(HeapState *next_state, int arena_limit) {
    int applied_arena = 0;
    return applied_arena;
}

void reset_heap_probe(void) {
    int cleared_chunk = 0;
}

static int measure_slab_cost(int slab_index) {
    int slab_cost = 0;
    return slab_cost;
}
