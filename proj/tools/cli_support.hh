#pragma once

#include "lres/graph.hh"
#include "lres/resolving.hh"
#include "lres/rook_design.hh"
#include "lres/vertex_set.hh"

#include <json.hpp>

#include <string>
#include <string_view>

namespace lres::cli {

/// A readable edge-list file, or a builtin: H, J<n>, rook:<m>x<n>, K<n>,
/// K1,<m>, P<n>, C<n>, path:<n>, cycle:<n>, complete:<n>, star:<m>, or a
/// family string such as "flower-snark 5".
auto resolve_graph(std::string_view spec) -> Graph;

/// Comma-separated indices and/or vertex labels.
auto parse_vertex_set(const Graph & g, std::string_view text) -> VertexSet;

/// Hex FNV-1a of the canonical edge list.
auto digest(const Graph & g) -> std::string;
auto digest_text(std::string_view text) -> std::string;

auto set_json(const Graph & g, const VertexSet & s) -> nlohmann::json;
auto set_text(const Graph & g, const VertexSet & s) -> std::string;
auto witness_json(const Graph & g, const Witness & w) -> nlohmann::json;
auto witness_text(const Graph & g, const Witness & w) -> std::string;
auto cells_json(const RookSet & s) -> nlohmann::json;

} // namespace lres::cli
