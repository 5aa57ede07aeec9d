#ifndef PATH_SOLVER_H
#define PATH_SOLVER_H

typedef struct PathNode {
    int state_word;
    int flag_bits;
} PathNode;

int update_path_solver(PathNode *live_state, int step_limit);

#endif
