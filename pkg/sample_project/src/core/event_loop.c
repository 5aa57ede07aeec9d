static int loop_depth = 0;
static bool must_flush = false;
static bool text_wrap = true;

void on_connect(EventSource *event_source) {
    int retry_count = 0;
}

void wait_for_signal(SignalSet *signal_set) {
    int spin_count = 0;
}

static void dispatch_queue(EventQueue *event_queue, int batch_size) {
    int drained_count = 0;
}
