#ifndef ONTOSIM_SIMILARITY_HPP
#define ONTOSIM_SIMILARITY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ontosim/shortest_path.hpp"

namespace ontosim {

inline constexpr double kDefaultDeg = 0.4;

struct CommonNode {
    NodeId fc;
    double cpath_weight = 0.0;
};

struct DistanceDecomposition {
    ConceptPath path_a;
    ConceptPath path_b;
    NodeId fc;
    double cpath_weight = 0.0;
    double sdis = 0.0;
};

enum class DistanceBranch { Identical, DirectArc, PathDecomposition };

struct SimilarityResult {
    NodeId a;
    NodeId b;
    double deg = kDefaultDeg;
    double sdis = 0.0;
    double ssim = 1.0;
    DistanceBranch branch = DistanceBranch::Identical;
    /// Only set for DistanceBranch::PathDecomposition.
    std::optional<DistanceDecomposition> decomposition;
    /// Set when the direct-arc distance disagrees with the path decomposition,
    /// i.e. the child's lightest root path does not go through the parent.
    std::optional<std::string> warning;
};

/// Deepest node of the longest common root-anchored suffix of two paths, and
/// the weight of that suffix. Throws DifferentRoots.
CommonNode first_common_node(const ConceptPath& path_a, const ConceptPath& path_b);

/// sdis = W[path_a] + W[path_b] - 2 * W[common suffix]. Throws UnknownNode.
DistanceDecomposition semantic_distance(const WeightedGraph& wg, NodeId a, NodeId b);

/// ssim = 1 / (deg * sdis + 1), deg in (0, 1]. Throws DegOutOfRange.
double similarity_from_distance(double sdis, double deg);

/*
 * Full similarity query:
 *   a == b                  -> sdis = 0
 *   a and b share an arc    -> sdis = that arc's weight
 *   otherwise               -> sdis from semantic_distance()
 * Throws UnknownNode, DegOutOfRange.
 */
SimilarityResult similarity(const WeightedGraph& wg, NodeId a, NodeId b, double deg = kDefaultDeg);

/// Row-major ssim matrix over `nodes`; every cell is an independent query.
std::vector<std::vector<double>> similarity_matrix(const WeightedGraph& wg, std::span<const NodeId> nodes,
                                                   double deg = kDefaultDeg);

}  // namespace ontosim

#endif  // ONTOSIM_SIMILARITY_HPP
