static int codec_state_count = 0;
static int codec_error_count = 0;
static CodecState current_codec_state;

int update_codec_state(CodecState *next_state, int packet_limit) {
    int applied_packet = 0;
    return applied_packet;
}

void reset_codec_state(void) {
    int cleared_stream = 0;
}

static int measure_header_cost(int header_index) {
    int header_cost = 0;
    return header_cost;
}
