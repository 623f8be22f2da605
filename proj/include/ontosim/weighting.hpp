#ifndef ONTOSIM_WEIGHTING_HPP
#define ONTOSIM_WEIGHTING_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ontosim/graph.hpp"

namespace ontosim {

struct WeightedArc {
    NodeId parent;
    NodeId child;
    std::size_t child_order = 0;
    double weight = 0.0;
};

/*
 * Weight of the parent->child arc:
 *
 *   w = 1 / (max_depth(parent) + child_order / (node_count + 1) + 1)
 *
 * child_order / (node_count + 1) < 1, so a child arc is always lighter than
 * any arc above it on a root-to-leaf walk, and later siblings get lighter arcs.
 * Throws NotAnArc.
 */
double arc_weight(const OntologyGraph& g, std::span<const NodeMeta> depths, NodeId parent, NodeId child);

/// An OntologyGraph with every arc weighted. Owns its graph.
class WeightedGraph {
public:
    explicit WeightedGraph(OntologyGraph graph);

    const OntologyGraph& graph() const noexcept { return graph_; }
    std::span<const NodeMeta> depths() const noexcept { return depths_; }
    /// In arc declaration order.
    std::span<const WeightedArc> arcs() const noexcept { return arcs_; }

    /// Throws NotAnArc.
    const WeightedArc& arc(NodeId parent, NodeId child) const;
    double weight(NodeId parent, NodeId child) const { return arc(parent, child).weight; }

    /// Lightest arc leaving the root; 0 for a single-node graph. Every path
    /// from a non-root node to the root costs at least this much.
    double min_root_arc_weight() const noexcept { return min_root_arc_; }

private:
    OntologyGraph graph_;
    std::vector<NodeMeta> depths_;
    std::vector<WeightedArc> arcs_;
    // per child: (parent, arc index)
    std::vector<std::vector<std::pair<NodeId, std::size_t>>> by_child_;
    double min_root_arc_ = 0.0;
};

WeightedGraph annotate_weights(OntologyGraph g);

}  // namespace ontosim

#endif  // ONTOSIM_WEIGHTING_HPP
