#ifndef AUDIO_MIXER_H
#define AUDIO_MIXER_H

typedef struct AudioState {
    int state_word;
    int flag_bits;
} AudioState;

int update_audio_mixer(AudioState *live_state, int step_limit);

#endif
