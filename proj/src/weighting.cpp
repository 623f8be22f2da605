#include "ontosim/weighting.hpp"

#include <algorithm>
#include <limits>

namespace ontosim {

double arc_weight(const OntologyGraph& g, std::span<const NodeMeta> depths, NodeId parent, NodeId child) {
    const std::size_t order = sibling_order(g, parent, child);
    const double depth = static_cast<double>(depths[parent.index].max_depth);
    const double offset = static_cast<double>(order) / static_cast<double>(g.node_count() + 1);
    return 1.0 / (depth + offset + 1.0);
}

WeightedGraph::WeightedGraph(OntologyGraph graph)
    : graph_(std::move(graph)), depths_(max_depths(graph_)), by_child_(graph_.node_count()) {
    double lightest = std::numeric_limits<double>::infinity();
    for (const Arc& a : graph_.arcs()) {
        WeightedArc wa{a.parent, a.child, sibling_order(graph_, a.parent, a.child),
                       arc_weight(graph_, depths_, a.parent, a.child)};
        by_child_[a.child.index].emplace_back(a.parent, arcs_.size());
        if (a.parent == graph_.root()) lightest = std::min(lightest, wa.weight);
        arcs_.push_back(wa);
    }
    min_root_arc_ = arcs_.empty() ? 0.0 : lightest;
}

const WeightedArc& WeightedGraph::arc(NodeId parent, NodeId child) const {
    if (child.index < by_child_.size()) {
        for (auto [p, i] : by_child_[child.index]) {
            if (p == parent) return arcs_[i];
        }
    }
    throw OntologyError(ErrorCode::NotAnArc, "no arc between the given nodes");
}

WeightedGraph annotate_weights(OntologyGraph g) { return WeightedGraph(std::move(g)); }

}  // namespace ontosim
