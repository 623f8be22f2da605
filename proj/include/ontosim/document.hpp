#ifndef ONTOSIM_DOCUMENT_HPP
#define ONTOSIM_DOCUMENT_HPP

#include <filesystem>
#include <istream>
#include <string_view>

#include "ontosim/graph.hpp"

namespace ontosim {

/*
 * Ontology text format:
 *
 *   # comment
 *   root: Vehicle
 *   Vehicle Bus
 *   Vehicle Car
 *
 * One "root: <label>" header, then one "<parent> <child>" line per arc.
 * A parent's child order is the order of its edge lines. Blank lines and
 * lines starting with '#' are ignored.
 */
OntologyGraph parse_ontology(std::istream& in);
OntologyGraph parse_ontology(std::string_view text);
OntologyGraph load_ontology_file(const std::filesystem::path& path);

}  // namespace ontosim

#endif  // ONTOSIM_DOCUMENT_HPP
