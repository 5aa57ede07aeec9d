static NetworkSecurityPolicyLimitTable network_security_policy_limit_table;

int max_render_target_color_buffer_size = 4096;

bool validate_network_policy(PolicyTable *policy_table) {
    bool policy_ok = true;
    return policy_ok;
}
