#include "ontosim/shortest_path.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "ontosim/numfmt.hpp"

namespace ontosim {

namespace {

// Root label is final once no frontier node can still undercut it.
bool root_settled(const std::set<std::pair<double, std::size_t>>& frontier, const std::vector<double>& label,
                  NodeId root, double root_arc_floor) {
    const double root_label = label[root.index];
    if (root_label == kUnbounded) return false;
    for (const auto& [w, idx] : frontier) {
        if (idx == root.index) continue;
        return root_label <= w + root_arc_floor;
    }
    return true;
}

}  // namespace

ShortestPathResult shortest_path_to_root(const WeightedGraph& wg, NodeId start) {
    const OntologyGraph& g = wg.graph();
    const std::size_t n = g.node_count();
    if (start.index >= n) throw OntologyError(ErrorCode::UnknownNode, "start node index out of range");
    const NodeId root = g.root();

    TraceRow current{std::vector<double>(n, kUnbounded), std::vector<std::optional<NodeId>>(n)};
    current.weight[start.index] = 0.0;

    ShortestPathResult result;
    result.trace.rows.push_back(current);

    // (label, index): ties go to the smaller load index.
    std::set<std::pair<double, std::size_t>> frontier{{0.0, start.index}};
    std::vector<bool> settled(n, false);

    while (!root_settled(frontier, current.weight, root, wg.min_root_arc_weight())) {
        if (frontier.empty()) {
            throw OntologyError(ErrorCode::UnreachableNode, g.label(start) + " cannot reach the root");
        }
        auto [t_weight, t_idx] = *frontier.begin();
        frontier.erase(frontier.begin());
        const NodeId t{t_idx};
        settled[t_idx] = true;
        if (t == root) break;

        for (NodeId s : g.parents(t)) {
            if (settled[s.index]) continue;
            const double candidate = t_weight + wg.weight(s, t);
            if (candidate < current.weight[s.index]) {
                frontier.erase({current.weight[s.index], s.index});
                current.weight[s.index] = candidate;
                current.predecessor[s.index] = t;
                frontier.emplace(candidate, s.index);
            }
        }
        result.trace.rows.push_back(current);
        result.trace.extracted.push_back(t);
    }

    ConceptPath& path = result.path;
    path.start = start;
    for (std::optional<NodeId> at = root; at; at = current.predecessor[at->index]) {
        path.nodes.push_back(*at);
        if (*at == start) break;
    }
    std::reverse(path.nodes.begin(), path.nodes.end());
    if (path.nodes.front() != start) {
        throw OntologyError(ErrorCode::UnreachableNode, "predecessor chain from the root does not reach the start");
    }
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
        const double w = wg.weight(path.nodes[i + 1], path.nodes[i]);
        path.arc_weights.push_back(w);
        path.total_weight += w;
    }
    return result;
}

namespace {

// Columns count code points, so "∞" and "∅" pad like one character.
std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

void pad_left(std::string& out, const std::string& cell, std::size_t width) {
    const std::size_t w = display_width(cell);
    if (w < width) out.append(width - w, ' ');
    out += cell;
}

void render_table(std::string& out, const OntologyGraph& g, const std::string& title,
                  const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> widths(g.node_count());
    for (std::size_t c = 0; c < widths.size(); ++c) {
        widths[c] = display_width(g.label(NodeId{c}));
        for (const auto& row : cells) widths[c] = std::max(widths[c], display_width(row[c]));
    }
    const std::size_t head = ("W" + std::to_string(cells.size() - 1)).size();

    out += title + "\n";
    out.append(head, ' ');
    for (std::size_t c = 0; c < widths.size(); ++c) {
        out += "  ";
        pad_left(out, g.label(NodeId{c}), widths[c]);
    }
    out += "\n";
    for (std::size_t r = 0; r < cells.size(); ++r) {
        std::string name = "W" + std::to_string(r);
        out += name;
        out.append(head - name.size(), ' ');
        for (std::size_t c = 0; c < widths.size(); ++c) {
            out += "  ";
            pad_left(out, cells[r][c], widths[c]);
        }
        out += "\n";
    }
}

}  // namespace

std::string render_trace(const OntologyGraph& g, const DijkstraTrace& trace) {
    std::vector<std::vector<std::string>> weights;
    std::vector<std::vector<std::string>> preds;
    for (const TraceRow& row : trace.rows) {
        auto& w = weights.emplace_back();
        auto& p = preds.emplace_back();
        for (std::size_t i = 0; i < g.node_count(); ++i) {
            w.push_back(format_fixed(row.weight[i], 3));
            p.push_back(row.predecessor[i] ? g.label(*row.predecessor[i]) : "∅");
        }
    }
    std::string out;
    render_table(out, g, "Weights", weights);
    out += "\n";
    render_table(out, g, "Predecessors", preds);
    return out;
}

}  // namespace ontosim
