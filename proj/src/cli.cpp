#include "ontosim/cli.hpp"

#include <fstream>
#include <functional>
#include <string_view>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ontosim/document.hpp"
#include "ontosim/numfmt.hpp"
#include "ontosim/report.hpp"
#include "ontosim/similarity.hpp"

namespace ontosim::cli {

namespace {

struct Options {
    std::string file;
    std::string baseline;
    std::string node;
    std::string a;
    std::string b;
    std::vector<std::string> nodes;
    std::string format = "csv";
    double deg = kDefaultDeg;
    int precision = 3;
    bool trace = false;
    bool explain = false;
};

std::string join_path(const OntologyGraph& g, const ConceptPath& p) {
    std::string s;
    for (NodeId n : p.nodes) s += (s.empty() ? "" : " > ") + g.label(n);
    return s;
}

int cmd_weights(const Options& o, std::ostream& out) {
    WeightedGraph wg(load_ontology_file(o.file));
    const auto& g = wg.graph();
    for (const auto& a : wg.arcs()) {
        out << g.label(a.parent) << ' ' << g.label(a.child) << ' ' << format_fixed(a.weight, o.precision) << '\n';
    }
    return kExitOk;
}

int cmd_path(const Options& o, std::ostream& out) {
    WeightedGraph wg(load_ontology_file(o.file));
    const auto& g = wg.graph();
    auto [path, trace] = shortest_path_to_root(wg, g.node(o.node));
    out << join_path(g, path) << " (" << format_fixed(path.total_weight, o.precision) << ")\n";
    if (o.trace) out << '\n' << render_trace(g, trace);
    return kExitOk;
}

int cmd_sim(const Options& o, std::ostream& out, std::ostream& err) {
    WeightedGraph wg(load_ontology_file(o.file));
    const auto& g = wg.graph();
    auto r = similarity(wg, g.node(o.a), g.node(o.b), o.deg);
    if (r.warning) err << "warning: " << *r.warning << '\n';
    if (!o.explain) {
        out << format_fixed(r.ssim, o.precision) << '\n';
        return kExitOk;
    }
    out << "ssim=" << format_fixed(r.ssim, o.precision) << " sdis=" << format_fixed(r.sdis, o.precision);
    switch (r.branch) {
        case DistanceBranch::Identical: out << " branch=identical"; break;
        case DistanceBranch::DirectArc: out << " branch=direct-arc"; break;
        case DistanceBranch::PathDecomposition:
            out << " fc=" << g.label(r.decomposition->fc)
                << " cpath=" << format_fixed(r.decomposition->cpath_weight, o.precision);
            break;
    }
    out << '\n';
    return kExitOk;
}

LabelledMatrix build_matrix(const WeightedGraph& wg, const std::vector<std::string>& labels, double deg) {
    std::vector<NodeId> ids;
    for (const auto& l : labels) ids.push_back(wg.graph().node(l));
    return {labels, similarity_matrix(wg, ids, deg)};
}

int cmd_matrix(const Options& o, std::ostream& out) {
    WeightedGraph wg(load_ontology_file(o.file));
    std::vector<std::string> labels = o.nodes;
    if (labels.empty()) {
        for (std::size_t i = 0; i < wg.graph().node_count(); ++i) labels.push_back(wg.graph().label(NodeId{i}));
    }
    auto m = build_matrix(wg, labels, o.deg);
    out << (o.format == "json" ? to_json(m, o.deg, o.precision) : to_csv(m, o.precision));
    return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
    WeightedGraph wg(load_ontology_file(o.file));
    std::ifstream in(o.baseline);
    if (!in) throw OntologyError(ErrorCode::InvalidBaseline, "cannot open " + o.baseline);
    auto baseline = read_matrix_csv(in);
    auto ours = build_matrix(wg, baseline.labels, o.deg);
    out << render_report(compare_matrices(ours, baseline, o.precision), o.precision);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Semantic similarity between concepts of an is-a ontology", "ontosim"};
    app.require_subcommand(1);
    Options o;

    auto deg_check = CLI::Validator(
        [](std::string& s) -> std::string {
            double d = 0.0;
            if (!CLI::detail::lexical_cast(s, d)) return "deg must be a number";
            return (d > 0.0 && d <= 1.0) ? "" : "deg must lie in (0, 1]";
        },
        "(0, 1]");
    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "Ontology document")->required();
        sub->add_option("--precision", o.precision, "Decimals in printed values")->check(CLI::Range(0, 12));
    };

    std::function<int()> action;

    auto* weights = app.add_subcommand("weights", "Print every arc weight");
    add_file(weights);
    weights->callback([&] { action = [&] { return cmd_weights(o, out); }; });

    auto* path = app.add_subcommand("path", "Lightest path from a node to the root");
    add_file(path);
    path->add_option("--node", o.node, "Start node")->required();
    path->add_flag("--trace", o.trace, "Print the per-iteration weight and predecessor tables");
    path->callback([&] { action = [&] { return cmd_path(o, out); }; });

    auto* sim = app.add_subcommand("sim", "Similarity of two nodes");
    add_file(sim);
    sim->add_option("--a", o.a, "First node")->required();
    sim->add_option("--b", o.b, "Second node")->required();
    sim->add_option("--deg", o.deg, "Impact degree of distance, in (0, 1]")->check(deg_check);
    sim->add_flag("--explain", o.explain, "Also print sdis, first common node and common path weight");
    sim->callback([&] { action = [&] { return cmd_sim(o, out, err); }; });

    auto* matrix = app.add_subcommand("matrix", "Similarity matrix over a node list");
    add_file(matrix);
    matrix->add_option("--nodes", o.nodes, "Comma separated node labels (default: all)")->delimiter(',');
    matrix->add_option("--deg", o.deg, "Impact degree of distance, in (0, 1]")->check(deg_check);
    matrix->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    matrix->callback([&] { action = [&] { return cmd_matrix(o, out); }; });

    auto* compare = app.add_subcommand("compare", "Cell deltas against a baseline CSV table");
    add_file(compare);
    compare->add_option("baseline", o.baseline, "Baseline CSV")->required();
    compare->add_option("--deg", o.deg, "Impact degree of distance, in (0, 1]")->check(deg_check);
    compare->callback([&] { action = [&] { return cmd_compare(o, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInput;
    }

    try {
        return action();
    } catch (const OntologyError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace ontosim::cli
