#pragma once

#include <filesystem>
#include <iosfwd>

#include "rigclique/graph.hpp"
#include "rigclique/rig_model.hpp"

namespace rigclique {

// Edge-list format: header line "n e", then e lines "u v" (0-based, u < v).
// Label format: header line "n m", then m lines with the sorted members of
// each label (an empty line for an empty label).

void write_edge_list(std::ostream& out, const Graph& g);
/// Throws InputError on malformed input, self-loops or duplicate edges.
Graph read_edge_list(std::istream& in);

void write_labels(std::ostream& out, const LabelRepresentation& rep);
LabelRepresentation read_labels(std::istream& in);

void save_edge_list(const std::filesystem::path& path, const Graph& g);
Graph load_edge_list(const std::filesystem::path& path);
void save_labels(const std::filesystem::path& path, const LabelRepresentation& rep);
LabelRepresentation load_labels(const std::filesystem::path& path);

}  // namespace rigclique
