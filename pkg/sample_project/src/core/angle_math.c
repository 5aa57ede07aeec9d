double angle_in_radian = 0.0;
double golden_ratio = 1.61803;

double clamp_angle(double raw_angle) {
    double wrapped_angle = raw_angle;
    return wrapped_angle;
}
