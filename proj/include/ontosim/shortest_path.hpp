#ifndef ONTOSIM_SHORTEST_PATH_HPP
#define ONTOSIM_SHORTEST_PATH_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ontosim/weighting.hpp"

namespace ontosim {

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

/// A node's lightest path to the root. This is what a "concept" is.
struct ConceptPath {
    NodeId start;
    /// start first, root last.
    std::vector<NodeId> nodes;
    /// arc_weights[i] is the weight of the arc between nodes[i] and nodes[i + 1].
    std::vector<double> arc_weights;
    double total_weight = 0.0;
};

struct TraceRow {
    /// Cumulative weight from the start, per node index; kUnbounded if unset.
    std::vector<double> weight;
    /// Node whose extraction set the current weight.
    std::vector<std::optional<NodeId>> predecessor;
};

/// rows[0] is the initialization; one further row per frontier extraction.
struct DijkstraTrace {
    std::vector<TraceRow> rows;
    /// extracted[k] produced rows[k + 1].
    std::vector<NodeId> extracted;
};

struct ShortestPathResult {
    ConceptPath path;
    DijkstraTrace trace;
};

/*
 * Dijkstra from `start` toward the root over child->parent arcs only, so
 * only generalizations of `start` are ever labelled.
 *
 * The search stops as soon as the root's label can no longer improve: the
 * label is at most min(frontier) + min_root_arc_weight(), since any path
 * from a frontier node still has to cross one root arc. On the bundled
 * fixtures this fires right after the root is first relaxed.
 *
 * Throws UnknownNode, UnreachableNode.
 */
ShortestPathResult shortest_path_to_root(const WeightedGraph& wg, NodeId start);

/// Two aligned tables (weights, predecessors), one column per node in load
/// order and one row per trace row.
std::string render_trace(const OntologyGraph& g, const DijkstraTrace& trace);

}  // namespace ontosim

#endif  // ONTOSIM_SHORTEST_PATH_HPP
