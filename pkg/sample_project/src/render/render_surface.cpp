namespace render {

int surface_width = 0;
int surface_height = 0;

class RenderSurface {
public:
    RenderSurface(int initial_width, int initial_height);
    void resizeNearestNeighborKernelBuffer(int kernel_radius);
    std::vector<Tile*> dirtyTiles;
    bool isDoubleBuffered() const { return doubleBuffered; }

private:
    bool doubleBuffered;
    int sampleCount;
    PixelFormat pixelFormat;
};

void RenderSurface::resizeNearestNeighborKernelBuffer(int kernel_radius) {
    int scaled_radius = kernel_radius * 2;
}

}
