#pragma once

#include "lres/graph.hh"

#include <filesystem>
#include <string>
#include <string_view>

namespace lres {

/// Edge-list text: first non-comment line is n, then one "u v" line per edge
/// with 0 <= u < v < n. Lines starting with '#' are comments. A comment of the
/// form "# family: <spec>" restores labels when the edges match that family.
auto parse_edge_list(std::string_view text) -> Graph;

/// Canonical form: edges sorted lexicographically, u < v.
auto write_edge_list(const Graph & g) -> std::string;

auto read_edge_list_file(const std::filesystem::path & path) -> Graph;
auto write_edge_list_file(const Graph & g, const std::filesystem::path & path) -> void;

} // namespace lres
