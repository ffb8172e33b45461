#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rtalt::core {

enum class Connective { existential, universal, leaf };

struct TreeEdge {
    std::string label;
    std::size_t child;
};

struct TreeNode {
    std::size_t level = 0;
    std::string label;
    Connective connective = Connective::leaf;
    bool value = false;
    std::vector<TreeEdge> children;
};

/// AND-OR tree. Node 0 is the root. Children are always appended after their
/// parent, so reverse index order is a valid bottom-up order.
class ComputationTree {
public:
    std::size_t add_node(std::size_t level, std::string label, Connective connective, bool value = false);
    void add_edge(std::size_t parent, std::string label, std::size_t child);

    const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
    TreeNode& node(std::size_t i) { return nodes_.at(i); }
    const TreeNode& node(std::size_t i) const { return nodes_.at(i); }
    std::size_t size() const noexcept { return nodes_.size(); }
    bool root_value() const { return nodes_.at(0).value; }

    /// Value of an inner node from its children: OR for existential, AND for
    /// universal (so childless existential nodes are false and childless
    /// universal nodes true). Leaves keep their stored value.
    bool evaluate_node(std::size_t i) const;
    /// Recomputes every inner value bottom-up and stores it.
    void recompute_values();
    /// True iff every stored inner value matches evaluate_node and every edge
    /// increases the level by exactly one.
    bool is_consistent() const;
    /// Lengths of all root-to-leaf paths (in edges).
    std::vector<std::size_t> path_lengths() const;

private:
    std::vector<TreeNode> nodes_;
};

/// Graphviz DOT rendering: shape encodes the connective, fill color the truth
/// value, edge labels carry move labels or outcomes.
std::string export_tree_dot(const ComputationTree& tree);

} // namespace rtalt::core
