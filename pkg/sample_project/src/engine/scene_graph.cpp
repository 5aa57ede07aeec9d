namespace engine {

class SceneGraph {
public:
    void attachSceneNode(SceneNode *parent_node);
    int activeGraphCount;
    std::vector<SceneNode*> pendingSceneNodes;

private:
    bool dirty_flag;
    SceneHandle root_handle;
};

void SceneGraph::attachSceneNode(SceneNode *parent_node) {
    int transform_slot = 0;
}

static int shared_child_budget = 64;

}
