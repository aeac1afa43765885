#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "setseq/graph.hpp"
#include "setseq/labeling.hpp"

namespace setseq {

// Graph file: "n m" then m lines "u v" with u < v.
std::string format_graph(const Graph& g);
Graph parse_graph(std::string_view text);

// Certificate file: optional "# ..." comment lines, "dim d", one
// "v <i> <bits>" line per vertex, then "e <u> <v> <bits>" per edge sorted by
// endpoint pair.
std::string format_certificate(const Certificate& c);
Certificate parse_certificate(std::string_view text);

// Same certificate with edges (and their labels) sorted by endpoint pair.
Certificate sorted_edges(const Certificate& c);

// "fnv1a64:" followed by 16 hex digits.
std::string content_hash(std::string_view bytes);

std::string read_file(const std::filesystem::path& p);
// Writes via a temporary file and rename.
void write_file(const std::filesystem::path& p, std::string_view contents);

}  // namespace setseq
