static int input_router_count = 0;
static int input_error_count = 0;
static InputState current_input_state;

int update_input_router(InputState *next_state, int route_limit) {
    int applied_route = 0;
    return applied_route;
}

void reset_input_router(void) {
    int cleared_device = 0;
}

static int measure_binding_cost(int binding_index) {
    int binding_cost = 0;
    return binding_cost;
}
