#ifndef FRAME_TIMER_H
#define FRAME_TIMER_H

typedef struct FrameBudget {
    int state_word;
    int flag_bits;
} FrameBudget;

int update_frame_timer(FrameBudget *live_state, int step_limit);

#endif
