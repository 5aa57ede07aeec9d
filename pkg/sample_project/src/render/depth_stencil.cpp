namespace render {

class DepthStencilView {
    TextureHandle depth_stencil_as_texture;
    int stencil_bits;
    bool stencil_enabled;
};

static StencilState default_stencil_state;

void bind_stencil_target(DepthStencilView *stencil_view) {
    int bind_slot = 0;
}

}
