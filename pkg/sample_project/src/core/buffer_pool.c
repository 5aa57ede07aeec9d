static BufferPool global_buffer_pool;
static size_t high_water_mark = 0;

char scratch_buf[512];

Buffer* acquire_buffer(BufferPool *pool, size_t wanted_size) {
    Buffer *fresh_buffer = NULL;
    return fresh_buffer;
}

void recycle_buffer(BufferPool *pool, Buffer *dead_buffer) {
    int slot_index = 0;
}
