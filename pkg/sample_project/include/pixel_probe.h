#ifndef PIXEL_PROBE_H
#define PIXEL_PROBE_H

typedef struct PixelProbe {
    int probe_id;
    float luma_sum;
} PixelProbe;

float sample_luma_grid(PixelProbe *probe_grid, int grid_stride);

#endif
