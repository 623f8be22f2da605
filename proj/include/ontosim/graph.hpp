#ifndef ONTOSIM_GRAPH_HPP
#define ONTOSIM_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ontosim {

enum class ErrorCode {
    ParseError,
    NoRoot,
    MultipleRoots,
    CycleDetected,
    UnreachableNode,
    DuplicateEdge,
    UnknownNodeInEdge,
    UnknownNode,
    NotAnArc,
    DifferentRoots,
    DegOutOfRange,
    InvalidBaseline,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported through this type.
class OntologyError : public std::runtime_error {
public:
    OntologyError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Load-time index of a node. Insertion order; used for every tie-break.
struct NodeId {
    std::size_t index = 0;
    auto operator<=>(const NodeId&) const = default;
};

struct Arc {
    NodeId parent;
    NodeId child;
};

class OntologyGraph;

/// Collects labels and parent->child arcs, then validates them into an
/// immutable OntologyGraph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::string root_label);

    /// Declares a node if absent; returns its index either way.
    NodeId add_node(std::string_view label);
    /// Both labels must have been declared.
    void add_edge(std::string_view parent, std::string_view child);

    OntologyGraph build() &&;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Single-rooted "is-a" DAG. Arcs are stored parent->child; traversal toward
/// the root follows parents.
class OntologyGraph {
public:
    NodeId root() const noexcept { return root_; }
    std::size_t node_count() const noexcept { return labels_.size(); }
    std::span<const Arc> arcs() const noexcept { return arcs_; }

    const std::string& label(NodeId n) const { return labels_.at(n.index); }
    std::optional<NodeId> find(std::string_view label) const;
    /// Throws UnknownNode.
    NodeId node(std::string_view label) const;

    /// Children in declaration order.
    std::span<const NodeId> children(NodeId n) const { return children_.at(n.index); }
    std::span<const NodeId> parents(NodeId n) const { return parents_.at(n.index); }

    bool has_arc(NodeId parent, NodeId child) const;

    /// Nodes ordered so that every parent precedes its children; ties by index.
    std::span<const NodeId> topological_order() const noexcept { return topo_; }

private:
    friend class GraphBuilder;
    OntologyGraph() = default;

    NodeId root_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<NodeId>> children_;
    std::vector<std::vector<NodeId>> parents_;
    std::vector<NodeId> topo_;
};

struct NodeMeta {
    NodeId node;
    std::size_t max_depth = 0;
};

/// Longest root-to-node path length (in arcs) for every node, indexed by
/// NodeId::index.
std::vector<NodeMeta> max_depths(const OntologyGraph& g);

/// 0-based position of `child` in `parent`'s child list. Throws NotAnArc.
std::size_t sibling_order(const OntologyGraph& g, NodeId parent, NodeId child);

}  // namespace ontosim

#endif  // ONTOSIM_GRAPH_HPP
