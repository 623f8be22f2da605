#include "ontosim/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>
#include <set>

namespace ontosim {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NoRoot: return "NoRoot";
        case ErrorCode::MultipleRoots: return "MultipleRoots";
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::UnreachableNode: return "UnreachableNode";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::UnknownNodeInEdge: return "UnknownNodeInEdge";
        case ErrorCode::UnknownNode: return "UnknownNode";
        case ErrorCode::NotAnArc: return "NotAnArc";
        case ErrorCode::DifferentRoots: return "DifferentRoots";
        case ErrorCode::DegOutOfRange: return "DegOutOfRange";
        case ErrorCode::InvalidBaseline: return "InvalidBaseline";
    }
    return "Unknown";
}

namespace {

bool valid_label(std::string_view label) {
    return !label.empty() &&
           std::none_of(label.begin(), label.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

GraphBuilder::GraphBuilder(std::string root_label) {
    if (!valid_label(root_label)) {
        throw OntologyError(ErrorCode::NoRoot, "root label is empty or contains whitespace");
    }
    add_node(root_label);
}

NodeId GraphBuilder::add_node(std::string_view label) {
    if (!valid_label(label)) {
        throw OntologyError(ErrorCode::ParseError, "invalid node label '" + std::string(label) + "'");
    }
    auto [it, inserted] = index_.try_emplace(std::string(label), labels_.size());
    if (inserted) labels_.emplace_back(label);
    return NodeId{it->second};
}

void GraphBuilder::add_edge(std::string_view parent, std::string_view child) {
    auto p = index_.find(std::string(parent));
    auto c = index_.find(std::string(child));
    if (p == index_.end() || c == index_.end()) {
        throw OntologyError(ErrorCode::UnknownNodeInEdge,
                            "edge " + std::string(parent) + " -> " + std::string(child) +
                                " references an undeclared node");
    }
    edges_.emplace_back(p->second, c->second);
}

OntologyGraph GraphBuilder::build() && {
    const std::size_t n = labels_.size();
    OntologyGraph g;
    g.root_ = NodeId{0};
    g.children_.resize(n);
    g.parents_.resize(n);

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [p, c] : edges_) {
        if (p == c) {
            throw OntologyError(ErrorCode::CycleDetected, "self-loop on " + labels_[p]);
        }
        if (!seen.emplace(p, c).second) {
            throw OntologyError(ErrorCode::DuplicateEdge, labels_[p] + " -> " + labels_[c]);
        }
        g.arcs_.push_back({NodeId{p}, NodeId{c}});
        g.children_[p].push_back(NodeId{c});
        g.parents_[c].push_back(NodeId{p});
    }

    for (std::size_t i = 1; i < n; ++i) {
        if (g.parents_[i].empty()) {
            throw OntologyError(ErrorCode::MultipleRoots,
                                labels_[i] + " has no parent but is not the root " + labels_[0]);
        }
    }

    // Kahn, smallest index first.
    std::vector<std::size_t> indegree(n);
    for (std::size_t i = 0; i < n; ++i) indegree[i] = g.parents_[i].size();
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i) {
        if (indegree[i] == 0) ready.push(i);
    }
    while (!ready.empty()) {
        std::size_t u = ready.top();
        ready.pop();
        g.topo_.push_back(NodeId{u});
        for (NodeId c : g.children_[u]) {
            if (--indegree[c.index] == 0) ready.push(c.index);
        }
    }
    if (g.topo_.size() != n) {
        std::string members;
        for (std::size_t i = 0; i < n; ++i) {
            if (indegree[i] != 0) members += (members.empty() ? "" : ", ") + labels_[i];
        }
        throw OntologyError(ErrorCode::CycleDetected, "cycle through " + members);
    }

    // With one parentless node and no cycle this always holds; checked anyway.
    std::vector<bool> reached(n, false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (NodeId c : g.children_[u]) {
            if (!reached[c.index]) {
                reached[c.index] = true;
                stack.push_back(c.index);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!reached[i]) {
            throw OntologyError(ErrorCode::UnreachableNode, labels_[i] + " cannot reach the root");
        }
    }

    g.labels_ = std::move(labels_);
    g.index_ = std::move(index_);
    return g;
}

std::optional<NodeId> OntologyGraph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return NodeId{it->second};
}

NodeId OntologyGraph::node(std::string_view label) const {
    if (auto id = find(label)) return *id;
    throw OntologyError(ErrorCode::UnknownNode, "no node labelled '" + std::string(label) + "'");
}

bool OntologyGraph::has_arc(NodeId parent, NodeId child) const {
    const auto& kids = children_.at(parent.index);
    return std::find(kids.begin(), kids.end(), child) != kids.end();
}

std::vector<NodeMeta> max_depths(const OntologyGraph& g) {
    std::vector<NodeMeta> meta(g.node_count());
    for (NodeId u : g.topological_order()) {
        meta[u.index].node = u;
        for (NodeId p : g.parents(u)) {
            meta[u.index].max_depth = std::max(meta[u.index].max_depth, meta[p.index].max_depth + 1);
        }
    }
    return meta;
}

std::size_t sibling_order(const OntologyGraph& g, NodeId parent, NodeId child) {
    if (parent.index >= g.node_count() || child.index >= g.node_count()) {
        throw OntologyError(ErrorCode::UnknownNode, "node index out of range");
    }
    auto kids = g.children(parent);
    auto it = std::find(kids.begin(), kids.end(), child);
    if (it == kids.end()) {
        throw OntologyError(ErrorCode::NotAnArc, g.label(parent) + " -> " + g.label(child));
    }
    return static_cast<std::size_t>(it - kids.begin());
}

}  // namespace ontosim
