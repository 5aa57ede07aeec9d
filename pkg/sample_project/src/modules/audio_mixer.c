static int audio_mixer_count = 0;
static int audio_error_count = 0;
static AudioState current_audio_state;

int update_audio_mixer(AudioState *next_state, int gain_limit) {
    int applied_gain = 0;
    return applied_gain;
}

void reset_audio_mixer(void) {
    int cleared_channel = 0;
}

static int measure_sample_cost(int sample_index) {
    int sample_cost = 0;
    return sample_cost;
}
