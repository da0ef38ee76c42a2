#pragma once

#include "lres/bits.hh"
#include "lres/distance.hh"
#include "lres/graph.hh"
#include "lres/vertex_set.hh"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace lres {

/// (d(s_1, X), ..., d(s_k, X)) in the index order of S.
using DistanceArray = std::vector<Distance>;

enum class Kind {
    resolving, ///< {l}-resolving: sets of size <= l are pairwise distinguished
    solid,     ///< l-solid-resolving: sets of size <= l are distinguished from every other set
    doubly     ///< doubly resolving; carries no order
};

struct Mode {
    Kind kind = Kind::resolving;
    int order = 1;

    static auto resolving(int ell) -> Mode { return {Kind::resolving, ell}; }
    static auto solid(int ell) -> Mode { return {Kind::solid, ell}; }
    static auto doubly() -> Mode { return {Kind::doubly, 0}; }

    /// Throws lres::Error unless the order is valid on a graph with n vertices.
    auto validate(int n) const -> void;

    friend auto operator==(const Mode &, const Mode &) -> bool = default;
};

auto to_string(Kind kind) -> std::string;
auto to_string(const Mode & mode) -> std::string;
auto parse_kind(std::string_view text) -> Kind;

/// Two distinct sets with equal distance arrays.
struct SetCollision {
    VertexSet first;
    VertexSet second;
};

/// x not in Y, yet d(s, x) >= d(s, Y) for every s in S.
struct SeparationFailure {
    Vertex x;
    VertexSet ys;
};

/// No x, y in S doubly resolve v and w.
struct UnresolvedPair {
    Vertex v;
    Vertex w;
};

using Witness = std::variant<SetCollision, SeparationFailure, UnresolvedPair>;

template <typename W>
struct Verdict {
    bool holds = true;
    std::optional<W> witness;

    static auto pass() -> Verdict { return {}; }
    static auto fail(W w) -> Verdict { return {false, std::move(w)}; }
    explicit operator bool() const { return holds; }
};

using CheckVerdict = Verdict<Witness>;

/// For every ordered pair (x, y) the set of vertices s with d(s, x) < d(s, y).
/// S satisfies the separation condition for (x, Y) iff S meets the
/// intersection of these sets over y in Y.
class SeparationTable {
public:
    explicit SeparationTable(const DistanceMatrix & dm);

    auto size() const -> int { return n_; }
    auto words_per_set() const -> std::size_t { return words_; }
    auto closer(Vertex x, Vertex y) const -> std::span<const VertexBits::Word>
    {
        return std::span<const VertexBits::Word>(bits_).subspan(
            (static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)) * words_, words_);
    }

private:
    int n_;
    std::size_t words_;
    std::vector<VertexBits::Word> bits_;
};

struct ResolvingOptions {
    /// Caller asserts S is already (l-1)-solid-resolving, so only sets of size
    /// exactly l can collide. Must not change the result when the claim is true.
    bool lower_order_solid = false;
    /// Arrays are kept in a hash table while they fit; above this the check
    /// falls back to a sort-based pass over (hash, rank) pairs.
    std::size_t memory_cap_bytes = std::size_t{512} << 20;
};

auto distance_array(const DistanceMatrix & dm, const VertexSet & s, std::span<const Vertex> x) -> DistanceArray;
auto distance_array(const DistanceMatrix & dm, const VertexSet & s, const VertexSet & x) -> DistanceArray;

auto is_l_resolving(const DistanceMatrix & dm, const VertexSet & s, int ell, const ResolvingOptions & opts = {}) -> CheckVerdict;

/// Separation characterisation: for all x and Y with x not in Y and |Y| <= l,
/// some s in S has d(s, x) < d(s, Y).
auto is_l_solid(const DistanceMatrix & dm, const VertexSet & s, int ell) -> CheckVerdict;
auto is_l_solid(const SeparationTable & table, const VertexSet & s, int ell) -> CheckVerdict;

/// Literal definition: compares the arrays of all sets of size <= l against all
/// nonempty vertex subsets. Exponential; refuses graphs above `cap` vertices.
auto is_l_solid_oracle(const DistanceMatrix & dm, const VertexSet & s, int ell, int cap = 12) -> CheckVerdict;

/// Necessary condition for {l}-resolving (l >= 2): separation for |Y| <= l - 1.
auto necessary_resolving_condition(const DistanceMatrix & dm, const VertexSet & s, int ell) -> CheckVerdict;

auto is_doubly_resolving(const DistanceMatrix & dm, const VertexSet & s) -> CheckVerdict;

/// Dispatches to the fast checker for the mode.
auto check_mode(const DistanceMatrix & dm, const VertexSet & s, const Mode & mode) -> CheckVerdict;

/// Recomputes the witness from distances and confirms it refutes S in `mode`.
auto witness_refutes(const DistanceMatrix & dm, const VertexSet & s, const Mode & mode, const Witness & w) -> bool;

enum class ForcedKind { solid, resolving };

/// Vertices v admitting U with v not in U, |U| <= l (solid) or l - 1 (resolving),
/// and N(v) inside N[U].
auto forced_vertices(const Graph & g, const DistanceMatrix & dm, int ell, ForcedKind kind) -> VertexSet;

/// Deletion oracle: v is forced iff V \ {v} fails the corresponding check.
auto forced_vertices_oracle(const Graph & g, const DistanceMatrix & dm, int ell, ForcedKind kind, int cap = 64) -> VertexSet;

} // namespace lres
