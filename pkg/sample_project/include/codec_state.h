#ifndef CODEC_STATE_H
#define CODEC_STATE_H

typedef struct CodecHeader {
    int state_word;
    int flag_bits;
} CodecHeader;

int update_codec_state(CodecHeader *live_state, int step_limit);

#endif
