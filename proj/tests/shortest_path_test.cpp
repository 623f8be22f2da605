#include <gtest/gtest.h>

#include <cmath>

#include "ontosim/document.hpp"
#include "ontosim/shortest_path.hpp"

using namespace ontosim;

namespace {

WeightedGraph load(const char* name) {
    return WeightedGraph(load_ontology_file(std::string(ONTOSIM_DATA_DIR) + "/" + name));
}

constexpr double kInf = kUnbounded;

// Reference iteration table for start H, columns A FC B C D E F G H.
const double kHTraceWeights[7][9] = {
    {kInf, kInf, kInf, kInf, kInf, kInf, kInf, kInf, 0},
    {kInf, kInf, kInf, kInf, kInf, 0.333, kInf, 0.2, 0},
    {kInf, kInf, kInf, 0.533, kInf, 0.333, 0.45, 0.2, 0},
    {kInf, 0.768, kInf, 0.533, kInf, 0.333, 0.45, 0.2, 0},
    {kInf, 0.768, kInf, 0.533, 0.783, 0.333, 0.45, 0.2, 0},
    {kInf, 0.768, kInf, 0.533, 0.783, 0.333, 0.45, 0.2, 0},
    {1.768, 0.768, kInf, 0.533, 0.783, 0.333, 0.45, 0.2, 0},
};

// Predecessor table for the same run; "" is empty.
const char* kHTracePredecessors[7][9] = {
    {"", "", "", "", "", "", "", "", ""},
    {"", "", "", "", "", "H", "", "H", ""},
    {"", "", "", "G", "", "H", "G", "H", ""},
    {"", "E", "", "G", "", "H", "G", "H", ""},
    {"", "E", "", "G", "F", "H", "G", "H", ""},
    {"", "E", "", "G", "F", "H", "G", "H", ""},
    {"FC", "E", "", "G", "F", "H", "G", "H", ""},
};

std::vector<std::string> labels(const OntologyGraph& g, const ConceptPath& p) {
    std::vector<std::string> out;
    for (NodeId n : p.nodes) out.push_back(g.label(n));
    return out;
}

}  // namespace

TEST(ShortestPath, Fig2FromH) {
    auto wg = load("fig2.onto");
    const auto& g = wg.graph();
    auto [path, trace] = shortest_path_to_root(wg, g.node("H"));
    EXPECT_EQ(labels(g, path), (std::vector<std::string>{"H", "E", "FC", "A"}));
    EXPECT_NEAR(path.total_weight, 1.768, 5e-4);
    EXPECT_DOUBLE_EQ(path.total_weight, 1.0 / 3.0 + 1.0 / 2.3 + 1.0);
    ASSERT_EQ(path.arc_weights.size(), 3u);
}

TEST(ShortestPath, Fig2TraceMatchesReferenceTables) {
    auto wg = load("fig2.onto");
    const auto& g = wg.graph();
    auto trace = shortest_path_to_root(wg, g.node("H")).trace;
    ASSERT_EQ(trace.rows.size(), 7u);
    for (std::size_t r = 0; r < 7; ++r) {
        for (std::size_t c = 0; c < 9; ++c) {
            const double got = trace.rows[r].weight[c];
            if (std::isinf(kHTraceWeights[r][c])) {
                EXPECT_TRUE(std::isinf(got)) << "row " << r << " col " << c;
            } else {
                EXPECT_NEAR(got, kHTraceWeights[r][c], 5e-4) << "row " << r << " col " << c;
            }
            const auto& pred = trace.rows[r].predecessor[c];
            EXPECT_EQ(pred ? g.label(*pred) : std::string(), kHTracePredecessors[r][c]) << "row " << r << " col " << c;
        }
    }
    std::vector<std::string> order;
    for (NodeId n : trace.extracted) order.push_back(g.label(n));
    EXPECT_EQ(order, (std::vector<std::string>{"H", "G", "E", "F", "C", "FC"}));
}

TEST(ShortestPath, RootStartsAtZero) {
    auto wg = load("fig2.onto");
    auto [path, trace] = shortest_path_to_root(wg, wg.graph().root());
    ASSERT_EQ(path.nodes.size(), 1u);
    EXPECT_EQ(path.total_weight, 0.0);
    EXPECT_EQ(trace.rows.size(), 1u);
}

TEST(ShortestPath, Fig2FromB) {
    auto wg = load("fig2.onto");
    const auto& g = wg.graph();
    auto [path, trace] = shortest_path_to_root(wg, g.node("B"));
    EXPECT_EQ(labels(g, path), (std::vector<std::string>{"B", "FC", "A"}));
    EXPECT_DOUBLE_EQ(path.total_weight, 1.5);
    const auto& last = trace.rows.back();
    EXPECT_DOUBLE_EQ(last.weight[g.node("A").index], 1.5);
    EXPECT_DOUBLE_EQ(last.weight[g.node("FC").index], 0.5);
    EXPECT_DOUBLE_EQ(last.weight[g.node("B").index], 0.0);
}

TEST(ShortestPath, UnknownNode) {
    auto wg = load("fig2.onto");
    try {
        shortest_path_to_root(wg, NodeId{99});
        FAIL();
    } catch (const OntologyError& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownNode);
    }
}

// S hangs off X (root arc 1.0) and Y (root arc ~0.61); the arc to X is the
// lighter one, so X is extracted first. Stopping the moment the root is
// first relaxed would return the heavier route through X.
TEST(ShortestPath, EarlyExitWaitsForCheaperRootArc) {
    std::string doc = "root: R\nR X\n";
    for (int i = 0; i < 8; ++i) doc += "R P" + std::to_string(i) + "\n";
    doc += "R Y\nX Q\nX S\nY S\n";
    auto wg = annotate_weights(parse_ontology(doc));
    const auto& g = wg.graph();
    const NodeId s = g.node("S");
    const double via_x = wg.weight(g.node("X"), s) + wg.weight(g.root(), g.node("X"));
    const double via_y = wg.weight(g.node("Y"), s) + wg.weight(g.root(), g.node("Y"));
    ASSERT_LT(wg.weight(g.node("X"), s), wg.weight(g.node("Y"), s));
    ASSERT_LT(via_y, via_x);
    auto [path, trace] = shortest_path_to_root(wg, s);
    EXPECT_EQ(labels(g, path), (std::vector<std::string>{"S", "Y", "R"}));
    EXPECT_DOUBLE_EQ(path.total_weight, via_y);
}

TEST(RenderTrace, Fig2FromH) {
    auto wg = load("fig2.onto");
    const auto& g = wg.graph();
    auto text = render_trace(g, shortest_path_to_root(wg, g.node("H")).trace);
    EXPECT_NE(text.find("Weights"), std::string::npos);
    EXPECT_NE(text.find("Predecessors"), std::string::npos);
    EXPECT_NE(text.find("W6  1.768  0.768"), std::string::npos) << text;
    EXPECT_EQ(text.find("W7"), std::string::npos);
    EXPECT_NE(text.find("∞"), std::string::npos);
    EXPECT_NE(text.find("∅"), std::string::npos);
}

TEST(RenderTrace, RootOnly) {
    auto wg = annotate_weights(parse_ontology("root: A"));
    auto text = render_trace(wg.graph(), shortest_path_to_root(wg, wg.graph().root()).trace);
    EXPECT_NE(text.find("W0  0.000"), std::string::npos) << text;
    EXPECT_EQ(text.find("W1"), std::string::npos);
}
