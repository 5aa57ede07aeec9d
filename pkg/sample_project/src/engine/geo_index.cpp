namespace engine {

class GeoIndex {
public:
    void attachGeoNode(GeoNode *parent_node);
    int activeIndexCount;
    std::vector<GeoNode*> pendingGeoNodes;

private:
    bool dirty_flag;
    GeoHandle root_handle;
};

void GeoIndex::attachGeoNode(GeoNode *parent_node) {
    int bucket_slot = 0;
}

static int shared_cell_budget = 64;

}
