#pragma once

#include "lres/distance.hh"
#include "lres/graph.hh"
#include "lres/resolving.hh"
#include "lres/vertex_set.hh"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lres {

// Flower snark J_n, n = 2k+1: star T_i = {a_i, b_i, c_i, d_i}, indices 1..n
// taken mod n, flat index = role * n + (i - 1) with roles a, b, c, d = 0..3.

auto snark_k(int n) -> int;
auto snark_vertex(int n, char role, int i) -> Vertex;
auto snark_role(int n, Vertex v) -> char;
auto snark_index(int n, Vertex v) -> int;
auto snark_label(int n, Vertex v) -> std::string;
/// "a3" style label to vertex; nullopt when malformed or out of range.
auto parse_snark_label(int n, std::string_view label) -> std::optional<Vertex>;
auto snark_set(int n, std::initializer_list<std::pair<char, int>> members) -> VertexSet;

enum class Recipe {
    l3,
    solid2,
    l2,
    solid1,
    dim1_corrected,
    dim1_erroneous
};

auto to_string(Recipe r) -> std::string;
auto parse_recipe(std::string_view text) -> Recipe;
auto recipe_set(Recipe r, int n) -> VertexSet;
/// Mode the recipe set is claimed to satisfy.
auto recipe_mode(Recipe r) -> Mode;

struct ErroneousSetReport {
    VertexSet erroneous;
    VertexSet corrected;
    /// Every pair of single vertices sharing an array under the erroneous set.
    std::vector<std::pair<Vertex, Vertex>> collisions;
    DistanceArray a1, bn, ak, bk1;
    bool named_collisions_hold = false;
    bool corrected_resolves = false;
};

auto check_erroneous_set(int n) -> ErroneousSetReport;

/// A vertex whose distances contradict one of the star lemmas.
struct StarLemmaViolation {
    Vertex s;
    std::string detail;
};

/// Distances from T_i to B = {b_{i-1}, b_{i+1}} and to B plus one of a_i, c_i, d_i.
auto verify_borthree(int n, int i) -> Verdict<StarLemmaViolation>;
/// Each pair among B ∪ {a_i}, B ∪ {c_i}, B ∪ {d_i} is told apart only by its two leaves.
auto verify_3vs3(int n, int i) -> Verdict<StarLemmaViolation>;

struct GapStatistics {
    int a_gap;
    int c_gap;
    bool a_violation; ///< a_gap > k - 1
    bool c_violation; ///< c_gap > k
};

auto gap_statistics(const VertexSet & s, int n) -> GapStatistics;

enum class ReductionVariant {
    literal, ///< x_n -> x_1 for every role
    twisted  ///< as literal, except c_n -> d_1 and d_n -> c_1
};

auto to_string(ReductionVariant v) -> std::string;

struct ReductionMap {
    int n, m, k, l;
    ReductionVariant variant;
    std::vector<Vertex> image;                   ///< indexed by V(J_n)
    std::vector<std::vector<Vertex>> preimages;  ///< indexed by V(J_m), ascending
};

auto reduction_map(int n, ReductionVariant variant = ReductionVariant::twisted) -> ReductionMap;

/// Vertices of J_n outside the stars 1, 2, k-1, k, k+1, k+2, n-1, n.
auto admissible_vertices(int n) -> VertexSet;

struct ReductionViolation {
    Vertex s;        ///< in J_n
    Vertex v;        ///< in J_m
    Vertex v_pre;    ///< preimage of v in J_n
    int expected;    ///< d_m(alpha(s), v)
    int actual;      ///< d_n(s, v_pre) after the side correction
};

auto reduction_distance_check(const ReductionMap & map, const DistanceMatrix & dn, const DistanceMatrix & dm,
    const VertexSet & s) -> Verdict<ReductionViolation>;
auto reduction_distance_check(int n, const VertexSet & s, ReductionVariant variant = ReductionVariant::twisted)
    -> Verdict<ReductionViolation>;

/// Minimum over shortest u-v paths of (number of stars met) - 1.
auto star_distance(const Graph & g, const DistanceMatrix & dm, Vertex u, Vertex v) -> int;
auto star_distance(Vertex u, Vertex v, int n) -> int;

struct WindowCheck {
    int near_max;   ///< max d_m(s, v) over the near window
    int far_min;    ///< min d_m(s, u) over the far window
    int k;
    bool holds;     ///< near_max <= 5 <= k - 4 <= far_min
};

/// Window inequality for the eight-element set, evaluated in J_{n-2}.
auto l2_window_check(int n) -> WindowCheck;

struct SuiteConfig {
    int n_min = 5;
    int n_max = 9;
    bool long_run = false;
    int workers = 1;
    std::uint64_t seed = 1;
    int reduction_samples = 50;
    double budget_seconds = 600.0;
};

struct SuiteRecord {
    int n;
    std::string check_name;
    bool holds;
    std::optional<std::string> witness;
    double millis;
};

auto run_snark_suite(const SuiteConfig & config) -> std::vector<SuiteRecord>;

} // namespace lres
