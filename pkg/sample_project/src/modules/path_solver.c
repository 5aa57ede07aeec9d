static int path_solver_count = 0;
static int path_error_count = 0;
static PathState current_path_state;

int update_path_solver(PathState *next_state, int node_limit) {
    int applied_node = 0;
    return applied_node;
}

void reset_path_solver(void) {
    int cleared_segment = 0;
}

static int measure_waypoint_cost(int waypoint_index) {
    int waypoint_cost = 0;
    return waypoint_cost;
}
