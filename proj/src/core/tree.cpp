#include "rtalt/core/tree.hpp"

#include <sstream>

namespace rtalt::core {

std::size_t ComputationTree::add_node(std::size_t level, std::string label, Connective connective, bool value)
{
    nodes_.push_back(TreeNode{level, std::move(label), connective, value, {}});
    return nodes_.size() - 1;
}

void ComputationTree::add_edge(std::size_t parent, std::string label, std::size_t child)
{
    nodes_.at(parent).children.push_back(TreeEdge{std::move(label), child});
}

bool ComputationTree::evaluate_node(std::size_t i) const
{
    const auto& n = nodes_.at(i);
    switch (n.connective) {
    case Connective::leaf:
        return n.value;
    case Connective::existential:
        for (const auto& e : n.children)
            if (nodes_[e.child].value)
                return true;
        return false;
    case Connective::universal:
        for (const auto& e : n.children)
            if (!nodes_[e.child].value)
                return false;
        return true;
    }
    return false;
}

void ComputationTree::recompute_values()
{
    for (std::size_t i = nodes_.size(); i-- > 0;)
        nodes_[i].value = evaluate_node(i);
}

bool ComputationTree::is_consistent() const
{
    if (nodes_.empty() || nodes_[0].level != 0)
        return false;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (const auto& e : nodes_[i].children)
            if (e.child <= i || nodes_[e.child].level != nodes_[i].level + 1)
                return false;
        if (nodes_[i].value != evaluate_node(i))
            return false;
    }
    return true;
}

std::vector<std::size_t> ComputationTree::path_lengths() const
{
    std::vector<std::size_t> out;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [i, len] = stack.back();
        stack.pop_back();
        if (nodes_[i].children.empty()) {
            out.push_back(len);
            continue;
        }
        for (const auto& e : nodes_[i].children)
            stack.emplace_back(e.child, len + 1);
    }
    return out;
}

namespace {

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

const char* shape_of(Connective c)
{
    switch (c) {
    case Connective::existential:
        return "invtriangle";
    case Connective::universal:
        return "box";
    case Connective::leaf:
        return "ellipse";
    }
    return "ellipse";
}

const char* glyph_of(Connective c)
{
    switch (c) {
    case Connective::existential:
        return "∨ ";
    case Connective::universal:
        return "∧ ";
    case Connective::leaf:
        return "";
    }
    return "";
}

} // namespace

std::string export_tree_dot(const ComputationTree& tree)
{
    std::ostringstream os;
    os << "digraph computation {\n";
    os << "  node [style=filled, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < tree.size(); ++i) {
        const auto& n = tree.node(i);
        os << "  n" << i << " [label=\"" << glyph_of(n.connective) << escape(n.label) << "\\nL" << n.level
           << "\", shape=" << shape_of(n.connective) << ", fillcolor=\"" << (n.value ? "palegreen" : "lightpink")
           << "\"];\n";
    }
    for (std::size_t i = 0; i < tree.size(); ++i)
        for (const auto& e : tree.node(i).children)
            os << "  n" << i << " -> n" << e.child << " [label=\"" << escape(e.label) << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace rtalt::core
