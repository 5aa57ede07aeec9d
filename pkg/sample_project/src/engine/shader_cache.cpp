namespace engine {

class ShaderCache {
public:
    void attachShaderNode(ShaderNode *parent_node);
    int activeCacheCount;
    std::vector<ShaderNode*> pendingShaderNodes;

private:
    bool dirty_flag;
    ShaderHandle root_handle;
};

void ShaderCache::attachShaderNode(ShaderNode *parent_node) {
    int uniform_slot = 0;
}

static int shared_binding_budget = 64;

}
