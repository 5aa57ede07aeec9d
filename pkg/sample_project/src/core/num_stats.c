int num_cols = 0;
int num_rows = 0;
int num_active_contexts = 0;

double running_mean = 0.0;

void accumulate_sample(double sample_value) {
    double centered_value = sample_value - running_mean;
}
