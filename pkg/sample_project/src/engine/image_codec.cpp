namespace engine {

class ImageCodec {
public:
    void attachImageNode(ImageNode *parent_node);
    int activeCodecCount;
    std::vector<ImageNode*> pendingImageNodes;

private:
    bool dirty_flag;
    ImageHandle root_handle;
};

void ImageCodec::attachImageNode(ImageNode *parent_node) {
    int scanline_slot = 0;
}

static int shared_palette_budget = 64;

}
