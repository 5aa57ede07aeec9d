static int color_space_count = 0;
static int color_error_count = 0;
static ColorState current_color_state;

int update_color_space(ColorState *next_state, int gamut_limit) {
    int applied_gamut = 0;
    return applied_gamut;
}

void reset_color_space(void) {
    int cleared_profile = 0;
}

static int measure_curve_cost(int curve_index) {
    int curve_cost = 0;
    return curve_cost;
}
