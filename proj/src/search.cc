#include "lres/search.hh"

#include "lres/combinations.hh"
#include "lres/errors.hh"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace lres {

namespace {
    using Clock = std::chrono::steady_clock;

    auto forced_for(const Graph & g, const DistanceMatrix & dm, const Mode & mode) -> VertexSet
    {
        switch (mode.kind) {
        case Kind::solid: return forced_vertices(g, dm, mode.order, ForcedKind::solid);
        case Kind::resolving: return forced_vertices(g, dm, mode.order, ForcedKind::resolving);
        case Kind::doubly: return VertexSet{};
        }
        return VertexSet{};
    }

    class CandidateTest {
    public:
        CandidateTest(const DistanceMatrix & dm, const Mode & mode, bool prefilter) :
            dm_(dm), mode_(mode), prefilter_(prefilter && mode.kind == Kind::resolving && mode.order >= 2)
        {
            if (mode.kind == Kind::solid || prefilter_)
                table_.emplace(dm);
        }

        // Returns (passes, rejected by prefilter).
        auto operator()(const VertexSet & s) const -> std::pair<bool, bool>
        {
            switch (mode_.kind) {
            case Kind::solid:
                return {is_l_solid(*table_, s, mode_.order).holds, false};
            case Kind::doubly:
                return {s.size() >= 2 && is_doubly_resolving(dm_, s).holds, false};
            case Kind::resolving:
                if (prefilter_) {
                    if (! is_l_solid(*table_, s, mode_.order - 1).holds)
                        return {false, true};
                    ResolvingOptions opts;
                    opts.lower_order_solid = true;
                    return {is_l_resolving(dm_, s, mode_.order, opts).holds, false};
                }
                return {is_l_resolving(dm_, s, mode_.order).holds, false};
            }
            return {false, false};
        }

    private:
        const DistanceMatrix & dm_;
        Mode mode_;
        bool prefilter_;
        std::optional<SeparationTable> table_;
    };

    struct ScanOutcome {
        std::optional<VertexSet> found;
        bool complete = true;
    };

    // Scans every set required ∪ T with |T| = t, T ⊆ free. Work unit j holds the
    // sets whose colex-leading free index is j, so units ascend in colex order.
    auto scan_cardinality(const CandidateTest & test, const VertexSet & required, const std::vector<Vertex> & free,
        int t, Clock::time_point deadline, int workers, SearchStats & stats) -> ScanOutcome
    {
        const int f = static_cast<int>(free.size());
        if (t < 0 || t > f)
            return {};

        std::atomic<std::uint64_t> examined{0}, filtered{0};
        std::atomic<bool> expired{false};

        auto build = [&](std::span<const int> lower, int lead) {
            std::vector<Vertex> members(required.begin(), required.end());
            for (auto i : lower)
                members.push_back(free[static_cast<std::size_t>(i)]);
            if (lead >= 0)
                members.push_back(free[static_cast<std::size_t>(lead)]);
            return VertexSet(std::move(members));
        };

        auto run_one = [&](const VertexSet & s) {
            auto [passes, rejected] = test(s);
            examined.fetch_add(1, std::memory_order_relaxed);
            if (rejected)
                filtered.fetch_add(1, std::memory_order_relaxed);
            return passes;
        };

        if (t == 0) {
            auto s = build({}, -1);
            ScanOutcome out;
            if (run_one(s))
                out.found = s;
            stats.subsets_examined += examined;
            stats.prefiltered += filtered;
            return out;
        }

        const int first_unit = t - 1, unit_count = f - t + 1;
        std::vector<std::optional<VertexSet>> unit_result(static_cast<std::size_t>(unit_count));
        std::vector<char> unit_done(static_cast<std::size_t>(unit_count), 0);
        std::atomic<int> next_unit{0};
        std::atomic<int> best_unit{unit_count};

        auto worker = [&] {
            std::uint64_t tick = 0;
            for (;;) {
                const int u = next_unit.fetch_add(1);
                if (u >= unit_count || u > best_unit.load() || expired.load())
                    return;
                const int lead = first_unit + u;
                bool stopped_by_clock = false;
                for_each_combination(lead, t - 1, [&](std::span<const int> lower) {
                    if ((++tick & 255) == 0) {
                        if (expired.load() || Clock::now() > deadline) {
                            expired.store(true);
                            stopped_by_clock = true;
                            return false;
                        }
                        if (best_unit.load() < u)
                            return false;
                    }
                    auto s = build(lower, lead);
                    if (run_one(s)) {
                        unit_result[static_cast<std::size_t>(u)] = std::move(s);
                        int cur = best_unit.load();
                        while (u < cur && ! best_unit.compare_exchange_weak(cur, u)) {
                        }
                        return false;
                    }
                    return true;
                });
                if (! stopped_by_clock)
                    unit_done[static_cast<std::size_t>(u)] = 1;
            }
        };

        if (workers <= 1)
            worker();
        else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back(worker);
            for (auto & th : pool)
                th.join();
        }

        stats.subsets_examined += examined;
        stats.prefiltered += filtered;

        ScanOutcome out;
        for (int u = 0; u < unit_count; ++u) {
            const auto idx = static_cast<std::size_t>(u);
            if (unit_result[idx] && unit_done[idx]) {
                out.found = unit_result[idx];
                return out;
            }
            if (! unit_done[idx]) {
                out.complete = false;
                return out;
            }
        }
        return out;
    }
}

auto SearchConfig::validate(int n) const -> void
{
    mode.validate(n);
    if (! (budget_seconds > 0))
        throw Error("time budget must be positive");
    if (workers < 1)
        throw Error("worker count must be at least 1");
    if (required)
        required->check_range(n);
    if (min_size && (*min_size < 0 || *min_size > n))
        throw Error("minimum cardinality out of range");
    if (max_size && (*max_size < 0 || *max_size > n))
        throw Error("maximum cardinality out of range");
}

auto to_string(BoundSource source) -> std::string
{
    switch (source) {
    case BoundSource::forced_count: return "forced-count";
    case BoundSource::ell_plus_one: return "ell-plus-one";
    case BoundSource::trivial: return "trivial";
    case BoundSource::exhausted_cardinality: return "exhausted-cardinality";
    }
    return "?";
}

auto to_string(CertificateStatus status) -> std::string
{
    switch (status) {
    case CertificateStatus::certified: return "certified";
    case CertificateStatus::not_passing: return "not-passing";
    case CertificateStatus::smaller_exists: return "smaller-exists";
    case CertificateStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

auto dimension_lower_bounds(const Graph & g, const DistanceMatrix & dm, const Mode & mode) -> std::vector<LowerBound>
{
    g.require_connected();
    mode.validate(g.size());
    std::vector<LowerBound> bounds;
    bounds.push_back({static_cast<int>(forced_for(g, dm, mode).size()), BoundSource::forced_count});
    switch (mode.kind) {
    case Kind::solid: bounds.push_back({mode.order + 1, BoundSource::ell_plus_one}); break;
    case Kind::resolving: bounds.push_back({1, BoundSource::trivial}); break;
    case Kind::doubly: bounds.push_back({2, BoundSource::trivial}); break;
    }
    return bounds;
}

auto metric_dimension(const Graph & g, const SearchConfig & config) -> DimensionResult
{
    g.require_connected();
    auto dm = all_pairs_distances(g);
    return metric_dimension(g, dm, config);
}

auto metric_dimension(const Graph & g, const DistanceMatrix & dm, const SearchConfig & config) -> DimensionResult
{
    const auto start = Clock::now();
    g.require_connected();
    const int n = g.size();
    config.validate(n);
    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(config.budget_seconds));

    DimensionResult result;
    auto bounds = dimension_lower_bounds(g, dm, config.mode);
    result.lower_bound = *std::max_element(bounds.begin(), bounds.end(),
        [](const LowerBound & a, const LowerBound & b) { return a.value < b.value; });
    result.required = config.required ? *config.required : forced_for(g, dm, config.mode);

    std::vector<Vertex> free;
    for (Vertex v = 0; v < n; ++v)
        if (! result.required.contains(v))
            free.push_back(v);

    int k = std::max(result.lower_bound.value, result.required.size());
    if (config.min_size)
        k = std::max(*config.min_size, result.required.size());
    const int k_max = config.max_size.value_or(n);

    CandidateTest test(dm, config.mode, config.prefilter);
    result.value = k;
    for (; k <= k_max; ++k) {
        if (Clock::now() > deadline)
            break;
        auto outcome = scan_cardinality(test, result.required, free, k - result.required.size(), deadline,
            config.workers, result.stats);
        if (outcome.found) {
            result.basis = std::move(outcome.found);
            result.value = k;
            result.exact = true;
            break;
        }
        if (! outcome.complete)
            break;
        result.last_exhausted = k;
        result.value = k + 1;
        if (k + 1 > result.lower_bound.value)
            result.lower_bound = {k + 1, BoundSource::exhausted_cardinality};
    }
    if (! result.exact)
        result.value = std::max(result.value, result.lower_bound.value);
    result.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

auto verify_basis_certificate(const Graph & g, const DistanceMatrix & dm, const Mode & mode, const VertexSet & s,
    double budget_seconds, int workers) -> Certificate
{
    g.require_connected();
    mode.validate(g.size());
    s.check_range(g.size());
    Certificate cert{CertificateStatus::not_passing, std::nullopt, {}};
    if (mode.kind == Kind::doubly && s.size() < 2)
        return cert;
    if (s.empty() || ! check_mode(dm, s, mode).holds)
        return cert;

    SearchConfig config;
    config.mode = mode;
    config.budget_seconds = budget_seconds;
    config.workers = workers;
    config.min_size = s.size() - 1;
    config.max_size = s.size() - 1;
    auto forced = forced_for(g, dm, mode);
    if (forced.size() > s.size() - 1) {
        cert.status = CertificateStatus::certified;
        return cert;
    }
    config.required = forced;
    auto r = metric_dimension(g, dm, config);
    cert.stats = r.stats;
    if (r.basis) {
        cert.status = CertificateStatus::smaller_exists;
        cert.smaller = r.basis;
    }
    else if (r.last_exhausted == s.size() - 1)
        cert.status = CertificateStatus::certified;
    else
        cert.status = CertificateStatus::inconclusive;
    return cert;
}

} // namespace lres
