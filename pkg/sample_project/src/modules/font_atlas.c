static int font_atlas_count = 0;
static int font_error_count = 0;
static FontState current_font_state;

int update_font_atlas(FontState *next_state, int glyph_limit) {
    int applied_glyph = 0;
    return applied_glyph;
}

void reset_font_atlas(void) {
    int cleared_kerning = 0;
}

static int measure_baseline_cost(int baseline_index) {
    int baseline_cost = 0;
    return baseline_cost;
}
