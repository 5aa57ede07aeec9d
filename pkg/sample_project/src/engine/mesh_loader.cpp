namespace engine {

class MeshLoader {
public:
    void attachMeshNode(MeshNode *parent_node);
    int activeLoaderCount;
    std::vector<MeshNode*> pendingMeshNodes;

private:
    bool dirty_flag;
    MeshHandle root_handle;
};

void MeshLoader::attachMeshNode(MeshNode *parent_node) {
    int vertex_slot = 0;
}

static int shared_normal_budget = 64;

}
