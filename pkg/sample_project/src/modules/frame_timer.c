static int frame_timer_count = 0;
static int frame_error_count = 0;
static FrameState current_frame_state;

int update_frame_timer(FrameState *next_state, int tick_limit) {
    int applied_tick = 0;
    return applied_tick;
}

void reset_frame_timer(void) {
    int cleared_budget = 0;
}

static int measure_deadline_cost(int deadline_index) {
    int deadline_cost = 0;
    return deadline_cost;
}
