#pragma once

#include "lres/graph.hh"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lres {

auto path_graph(int n) -> Graph;
auto cycle_graph(int n) -> Graph;
auto complete_graph(int n) -> Graph;

/// K_{1,m}: vertex 0 is the centre.
auto star_graph(int m) -> Graph;

/// parent[0] must be -1; every other parent index must be smaller than its child.
auto tree_from_parents(std::span<const int> parent) -> Graph;

/// Vertex av of G □ H, stored at flat index g * |V(H)| + h.
struct ProductCoord {
    Vertex g;
    Vertex h;
    Vertex flat;
};

auto product_coord(int h_size, Vertex flat) -> ProductCoord;
auto product_flat(int h_size, Vertex g, Vertex h) -> Vertex;

auto cartesian_product(const Graph & g, const Graph & h) -> Graph;

/// Flower snark J_n, n odd and >= 5. Vertices are laid out in blocks
/// [a_1..a_n][b_1..b_n][c_1..c_n][d_1..d_n]; b_i is the centre of star T_i.
auto flower_snark(int n) -> Graph;

/// Rook's graph K_m □ K_n. Columns come from K_m, rows from K_n, and the
/// cell in column c, row r has flat index c * n + r (the product layout).
auto rook_graph(int m, int n) -> Graph;

/// The nine-vertex example graph H with vertices v1..v9 at indices 0..8.
/// Throws lres::Error if its distances disagree with the published arrays.
auto graph_h() -> Graph;

/// Named family plus integer parameters, e.g. {"rook", {7, 7}}.
struct FamilySpec {
    std::string name;
    std::vector<int> params;
};

auto generate_family(const FamilySpec & spec) -> Graph;

/// Parses "flower-snark 5", "rook 7 7", "path 5", "H", ... (the family() format).
auto parse_family(std::string_view text) -> FamilySpec;
auto to_string(const FamilySpec & spec) -> std::string;

} // namespace lres
