#include "ontosim/similarity.hpp"

#include <cmath>

#include <fmt/format.h>

namespace ontosim {

CommonNode first_common_node(const ConceptPath& path_a, const ConceptPath& path_b) {
    if (path_a.nodes.empty() || path_b.nodes.empty() || path_a.nodes.back() != path_b.nodes.back()) {
        throw OntologyError(ErrorCode::DifferentRoots, "paths do not end at the same root");
    }
    auto ia = path_a.nodes.rbegin();
    auto ib = path_b.nodes.rbegin();
    std::size_t shared = 0;
    while (ia != path_a.nodes.rend() && ib != path_b.nodes.rend() && *ia == *ib) {
        ++ia;
        ++ib;
        ++shared;
    }
    // The suffix nodes are path_a.nodes[first ..]; its arcs are arc_weights[first ..].
    const std::size_t first = path_a.nodes.size() - shared;
    CommonNode out{path_a.nodes[first], 0.0};
    for (std::size_t i = first; i < path_a.arc_weights.size(); ++i) out.cpath_weight += path_a.arc_weights[i];
    return out;
}

DistanceDecomposition semantic_distance(const WeightedGraph& wg, NodeId a, NodeId b) {
    DistanceDecomposition d;
    d.path_a = shortest_path_to_root(wg, a).path;
    d.path_b = shortest_path_to_root(wg, b).path;
    auto common = first_common_node(d.path_a, d.path_b);
    d.fc = common.fc;
    d.cpath_weight = common.cpath_weight;
    d.sdis = d.path_a.total_weight + d.path_b.total_weight - 2.0 * d.cpath_weight;
    // Cancellation can leave a tiny negative residue for identical paths.
    if (d.sdis < 0.0) d.sdis = 0.0;
    return d;
}

double similarity_from_distance(double sdis, double deg) {
    if (!(deg > 0.0 && deg <= 1.0)) {
        throw OntologyError(ErrorCode::DegOutOfRange, fmt::format("deg must lie in (0, 1], got {}", deg));
    }
    return 1.0 / (deg * sdis + 1.0);
}

SimilarityResult similarity(const WeightedGraph& wg, NodeId a, NodeId b, double deg) {
    const OntologyGraph& g = wg.graph();
    if (a.index >= g.node_count() || b.index >= g.node_count()) {
        throw OntologyError(ErrorCode::UnknownNode, "node index out of range");
    }
    SimilarityResult r;
    r.a = a;
    r.b = b;
    r.deg = deg;
    // Validate deg before any path work.
    similarity_from_distance(0.0, deg);

    if (a == b) {
        r.branch = DistanceBranch::Identical;
        r.sdis = 0.0;
    } else if (g.has_arc(a, b) || g.has_arc(b, a)) {
        r.branch = DistanceBranch::DirectArc;
        r.sdis = g.has_arc(a, b) ? wg.weight(a, b) : wg.weight(b, a);
        const double via_paths = semantic_distance(wg, a, b).sdis;
        if (std::abs(via_paths - r.sdis) > 1e-12) {
            r.warning = fmt::format("direct arc {} - {} gives sdis {:.6f}, path decomposition gives {:.6f}",
                                    g.label(a), g.label(b), r.sdis, via_paths);
        }
    } else {
        r.branch = DistanceBranch::PathDecomposition;
        r.decomposition = semantic_distance(wg, a, b);
        r.sdis = r.decomposition->sdis;
    }
    r.ssim = similarity_from_distance(r.sdis, deg);
    return r;
}

std::vector<std::vector<double>> similarity_matrix(const WeightedGraph& wg, std::span<const NodeId> nodes,
                                                   double deg) {
    similarity_from_distance(0.0, deg);
    std::vector<std::vector<double>> m(nodes.size(), std::vector<double>(nodes.size(), 1.0));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            m[i][j] = similarity(wg, nodes[i], nodes[j], deg).ssim;
        }
    }
    return m;
}

}  // namespace ontosim
