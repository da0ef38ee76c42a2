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

struct SearchConfig {
    Mode mode = Mode::resolving(1);
    double budget_seconds = 60.0;
    int workers = 1;
    /// Restricts the cardinalities tried; defaults to [max lower bound, n].
    std::optional<int> min_size;
    std::optional<int> max_size;
    /// Vertices every candidate must contain; defaults to the forced vertices.
    std::optional<VertexSet> required;
    /// In resolving mode, reject candidates failing the (l-1)-solid condition first.
    bool prefilter = true;

    auto validate(int n) const -> void;
};

enum class BoundSource {
    forced_count,
    ell_plus_one,
    trivial,
    exhausted_cardinality
};

auto to_string(BoundSource source) -> std::string;

struct LowerBound {
    int value;
    BoundSource source;
};

struct SearchStats {
    std::uint64_t subsets_examined = 0;
    std::uint64_t prefiltered = 0;
    double wall_seconds = 0.0;
};

struct DimensionResult {
    /// When exact, the dimension; otherwise the best proven lower bound.
    int value = 0;
    bool exact = false;
    std::optional<VertexSet> basis;
    LowerBound lower_bound{0, BoundSource::trivial};
    /// Largest cardinality fully exhausted without a passing set, or -1.
    int last_exhausted = -1;
    VertexSet required;
    SearchStats stats;
};

auto dimension_lower_bounds(const Graph & g, const DistanceMatrix & dm, const Mode & mode) -> std::vector<LowerBound>;

auto metric_dimension(const Graph & g, const SearchConfig & config) -> DimensionResult;
auto metric_dimension(const Graph & g, const DistanceMatrix & dm, const SearchConfig & config) -> DimensionResult;

enum class CertificateStatus {
    certified,      ///< S passes and no set of size |S|-1 does
    not_passing,    ///< S itself fails the mode check
    smaller_exists, ///< some (|S|-1)-set passes
    inconclusive    ///< budget ran out before exhaustion
};

auto to_string(CertificateStatus status) -> std::string;

struct Certificate {
    CertificateStatus status;
    std::optional<VertexSet> smaller;
    SearchStats stats;
};

/// Supersets of passing sets pass, so exhausting size |S|-1 settles minimality.
auto verify_basis_certificate(const Graph & g, const DistanceMatrix & dm, const Mode & mode, const VertexSet & s,
    double budget_seconds = 60.0, int workers = 1) -> Certificate;

} // namespace lres
