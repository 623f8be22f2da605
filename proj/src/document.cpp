#include "ontosim/document.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ontosim {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(std::move(tok));
    return out;
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

OntologyGraph parse_ontology(std::istream& in) {
    std::optional<GraphBuilder> builder;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::string_view body(line);
        body.remove_prefix(first);
        if (body.starts_with("root:")) {
            if (builder) {
                throw OntologyError(ErrorCode::MultipleRoots, where(line_no) + "second root header");
            }
            auto toks = tokens(std::string(body.substr(5)));
            if (toks.size() != 1) {
                throw OntologyError(ErrorCode::NoRoot, where(line_no) + "root header needs exactly one label");
            }
            builder.emplace(toks.front());
            continue;
        }

        auto toks = tokens(line);
        if (toks.size() != 2) {
            throw OntologyError(ErrorCode::ParseError,
                                where(line_no) + "expected '<parent> <child>', got '" + line + "'");
        }
        if (!builder) {
            throw OntologyError(ErrorCode::NoRoot, where(line_no) + "edge before the 'root:' header");
        }
        builder->add_node(toks[0]);
        builder->add_node(toks[1]);
        builder->add_edge(toks[0], toks[1]);
    }
    if (!builder) throw OntologyError(ErrorCode::NoRoot, "document has no 'root:' header");
    return std::move(*builder).build();
}

OntologyGraph parse_ontology(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_ontology(in);
}

OntologyGraph load_ontology_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw OntologyError(ErrorCode::ParseError, "cannot open " + path.string());
    return parse_ontology(in);
}

}  // namespace ontosim
