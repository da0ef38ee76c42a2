#pragma once

#include "lres/resolving.hh"
#include "lres/vertex_set.hh"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lres {

// Cells of K_m □ K_n: columns come from K_m, rows from K_n, and the flat
// vertex index in rook_graph(m, n) is col * n + row.

struct Cell {
    int row;
    int col;
    friend auto operator==(const Cell &, const Cell &) -> bool = default;
    friend auto operator<=>(const Cell &, const Cell &) = default;
};

class RookSet {
public:
    RookSet(int m, int n);
    static auto from_vertex_set(int m, int n, const VertexSet & s) -> RookSet;
    static auto full(int m, int n) -> RookSet;

    auto m() const -> int { return m_; }
    auto n() const -> int { return n_; }
    auto flat(Cell c) const -> Vertex;
    auto contains(Cell c) const -> bool;
    auto insert(Cell c) -> void;
    auto erase(Cell c) -> void;
    auto size() const -> int;
    auto row_count(int row) const -> int;
    auto col_count(int col) const -> int;
    auto cells() const -> std::vector<Cell>;
    auto to_vertex_set() const -> VertexSet;

    friend auto operator==(const RookSet &, const RookSet &) -> bool = default;

private:
    auto check(Cell c) const -> void;
    int m_, n_;
    std::vector<char> member_;
};

/// The cells {av, au, bv, bu} with columns a < b and rows v < u.
struct Quadruple {
    int col_a, col_b;
    int row_v, row_u;
    friend auto operator==(const Quadruple &, const Quadruple &) -> bool = default;
};

/// Holds iff every quadruple meets S; the witness is the first empty one in
/// (col_a, col_b, row_v, row_u) lexicographic order.
auto quadruple_coverage(const RookSet & s) -> Verdict<Quadruple>;

struct RookClassification {
    /// Some cell v with {v} ∪ (V \ N(v)) ⊆ S.
    std::optional<Cell> type1_centre;
    /// Every row and column holds at least two members and every quadruple meets S.
    bool type2 = false;

    auto type1() const -> bool { return type1_centre.has_value(); }
    auto neither() const -> bool { return ! type1() && ! type2; }
};

auto classify_conditions(const RookSet & s) -> RookClassification;

/// A row or column with fewer than two members.
struct SparseLine {
    bool is_row;
    int index;
    int members;
};

using RookWitness = std::variant<SparseLine, Quadruple>;

/// The sufficient condition for {2}-resolving when m >= n >= 6.
auto sufficiency_check(const RookSet & s) -> Verdict<RookWitness>;

struct RookBound {
    int value;
    /// Set when the arguments had more rows than columns and were swapped.
    bool transposed;
};

/// Smallest s = qm + r with r C(n-q-1, 2) + (m-r) C(n-q, 2) <= C(n, 2).
auto rook_lower_bound(int m, int n) -> RookBound;

struct Design {
    int points = 0;
    std::vector<std::vector<int>> blocks;
    friend auto operator==(const Design &, const Design &) -> bool = default;
};

/// Block j lists the rows of column j that are missing from S.
auto design_to_set(const Design & d, int m, int n) -> RookSet;
auto set_to_design(const RookSet & s) -> Design;

struct DesignViolation {
    /// 1: oversized block, 2: point in too many blocks, 3: pair in two blocks.
    int condition;
    int block = -1;
    int other_block = -1;
    int point = -1;
    int other_point = -1;
};

auto to_string(const DesignViolation & v) -> std::string;

/// Blocks of size <= n-2, points in <= m-2 blocks, pairs in <= 1 block.
auto validate_design(const Design & d, int m, int n) -> Verdict<DesignViolation>;

/// "points blocks" header, then one whitespace-separated line per block.
auto parse_design(std::string_view text) -> Design;
auto write_design(const Design & d) -> std::string;
auto read_design_file(const std::filesystem::path & path) -> Design;

} // namespace lres
