#include <gtest/gtest.h>

#include "property_checks.hpp"

namespace {

std::string first(const props::Violations& v) { return v.empty() ? "" : v.front(); }

}  // namespace

class RandomDags : public ::testing::TestWithParam<unsigned> {};

TEST_P(RandomDags, Invariants) {
    auto s = props::run_all(GetParam(), 100);
    EXPECT_EQ(s.graphs, 100);
    EXPECT_TRUE(s.shortest_paths.empty()) << first(s.shortest_paths);
    EXPECT_TRUE(s.descending.empty()) << first(s.descending);
    EXPECT_TRUE(s.similarity.empty()) << first(s.similarity);
    EXPECT_TRUE(s.distance.empty()) << first(s.distance);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomDags, ::testing::Values(1u, 2u, 3u, 42u));

// Wide, shallow graphs put many siblings under the root so root arcs differ a
// lot; that is where a premature stop would show up.
TEST(RandomDags, WideGraphs) {
    std::mt19937 rng(99);
    props::Violations v;
    for (int t = 0; t < 200; ++t) {
        oracle::Dag dag{"r", {}};
        std::uniform_int_distribution<int> width(2, 8);
        const int w = width(rng);
        for (int i = 0; i < w; ++i) dag.edges.emplace_back("r", "m" + std::to_string(i));
        std::bernoulli_distribution pick(0.4);
        for (int leaf = 0; leaf < 3; ++leaf) {
            const std::string l = "l" + std::to_string(leaf);
            bool any = false;
            for (int i = 0; i < w; ++i) {
                if (pick(rng)) {
                    dag.edges.emplace_back("m" + std::to_string(i), l);
                    any = true;
                }
            }
            if (!any) dag.edges.emplace_back("m0", l);
        }
        std::shuffle(dag.edges.begin() + w, dag.edges.end(), rng);
        auto wg = ontosim::annotate_weights(ontosim::parse_ontology(dag.document()));
        props::check_shortest_paths(dag, wg, v);
        props::check_semantic_distance(dag, wg, v);
    }
    EXPECT_TRUE(v.empty()) << first(v);
}
