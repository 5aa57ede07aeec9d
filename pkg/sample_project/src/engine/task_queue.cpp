namespace engine {

class TaskQueue {
public:
    void attachTaskNode(TaskNode *parent_node);
    int activeQueueCount;
    std::vector<TaskNode*> pendingTaskNodes;

private:
    bool dirty_flag;
    TaskHandle root_handle;
};

void TaskQueue::attachTaskNode(TaskNode *parent_node) {
    int worker_slot = 0;
}

static int shared_ticket_budget = 64;

}
