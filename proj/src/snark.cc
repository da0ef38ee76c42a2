#include "lres/snark.hh"

#include "lres/combinations.hh"
#include "lres/errors.hh"
#include "lres/generators.hh"
#include "lres/search.hh"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

namespace lres {

namespace {
    auto require_snark_n(int n) -> void
    {
        if (n < 5 || n % 2 == 0)
            throw Error("flower snark needs odd n >= 5, got " + std::to_string(n));
    }

    auto role_number(char role) -> int
    {
        switch (role) {
        case 'a': return 0;
        case 'b': return 1;
        case 'c': return 2;
        case 'd': return 3;
        }
        throw Error(std::string("unknown snark role '") + role + "'");
    }

    auto wrap(int i, int n) -> int { return ((i - 1) % n + n) % n + 1; }

    auto star_of(Vertex v, int n) -> int { return v % n + 1; }

    auto set_string(const Graph & g, const VertexSet & s) -> std::string
    {
        std::string out = "{";
        for (int i = 0; i < s.size(); ++i)
            out += (i ? "," : "") + g.label(s[i]);
        return out + "}";
    }

    auto array_string(const DistanceArray & a) -> std::string
    {
        std::string out = "(";
        for (std::size_t i = 0; i < a.size(); ++i)
            out += (i ? "," : "") + std::to_string(a[i]);
        return out + ")";
    }
}

auto snark_k(int n) -> int
{
    require_snark_n(n);
    return (n - 1) / 2;
}

auto snark_vertex(int n, char role, int i) -> Vertex
{
    return role_number(role) * n + wrap(i, n) - 1;
}

auto snark_role(int n, Vertex v) -> char
{
    if (v < 0 || v >= 4 * n)
        throw Error("vertex " + std::to_string(v) + " outside J_" + std::to_string(n));
    return "abcd"[v / n];
}

auto snark_index(int n, Vertex v) -> int
{
    if (v < 0 || v >= 4 * n)
        throw Error("vertex " + std::to_string(v) + " outside J_" + std::to_string(n));
    return v % n + 1;
}

auto snark_label(int n, Vertex v) -> std::string
{
    return std::string(1, snark_role(n, v)) + std::to_string(snark_index(n, v));
}

auto parse_snark_label(int n, std::string_view label) -> std::optional<Vertex>
{
    if (label.size() < 2 || label[0] < 'a' || label[0] > 'd')
        return std::nullopt;
    int i = 0;
    for (auto ch : label.substr(1)) {
        if (ch < '0' || ch > '9' || i > 100000)
            return std::nullopt;
        i = i * 10 + (ch - '0');
    }
    if (i < 1 || i > n)
        return std::nullopt;
    return snark_vertex(n, label[0], i);
}

auto snark_set(int n, std::initializer_list<std::pair<char, int>> members) -> VertexSet
{
    std::vector<Vertex> vs;
    for (auto [role, i] : members)
        vs.push_back(snark_vertex(n, role, i));
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return VertexSet(std::move(vs));
}

auto to_string(Recipe r) -> std::string
{
    switch (r) {
    case Recipe::l3: return "L3";
    case Recipe::solid2: return "Solid2";
    case Recipe::l2: return "L2";
    case Recipe::solid1: return "Solid1";
    case Recipe::dim1_corrected: return "Dim1Corrected";
    case Recipe::dim1_erroneous: return "Dim1Erroneous";
    }
    return "?";
}

auto parse_recipe(std::string_view text) -> Recipe
{
    for (auto r : {Recipe::l3, Recipe::solid2, Recipe::l2, Recipe::solid1, Recipe::dim1_corrected, Recipe::dim1_erroneous})
        if (to_string(r) == text)
            return r;
    throw Error("unknown recipe '" + std::string(text) + "'");
}

auto recipe_set(Recipe r, int n) -> VertexSet
{
    const int k = snark_k(n);
    switch (r) {
    case Recipe::l3: {
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < 4 * n; ++v)
            if (snark_role(n, v) != 'b')
                vs.push_back(v);
        return VertexSet(std::move(vs));
    }
    case Recipe::solid2: {
        auto s = snark_set(n, {{'a', 1}, {'c', 1}, {'d', 1}, {'a', k + 1}, {'a', k + 2}, {'c', k + 2}, {'d', k + 2}});
        for (int i = 1; i <= n; ++i)
            if (i != 1 && i != k + 2)
                s = s.with(snark_vertex(n, 'b', i));
        return s;
    }
    case Recipe::l2:
        if (n < 7)
            throw Error("the eight-element recipe needs n >= 7");
        return snark_set(n, {{'a', 1}, {'c', 1}, {'d', 1}, {'a', 2}, {'a', k + 1}, {'a', k + 2}, {'c', k + 2}, {'d', k + 2}});
    case Recipe::solid1:
        return snark_set(n, {{'a', 1}, {'a', k + 2}, {'c', 1}, {'d', 1}, {'c', k + 1}, {'d', k + 1}});
    case Recipe::dim1_corrected:
        return snark_set(n, {{'c', 1}, {'d', 1}, {'d', k + 1}});
    case Recipe::dim1_erroneous:
        return snark_set(n, {{'c', 1}, {'d', 1}, {'d', k}});
    }
    throw Error("unknown recipe");
}

auto recipe_mode(Recipe r) -> Mode
{
    switch (r) {
    case Recipe::l3: return Mode::resolving(3);
    case Recipe::solid2: return Mode::solid(2);
    case Recipe::l2: return Mode::resolving(2);
    case Recipe::solid1: return Mode::solid(1);
    case Recipe::dim1_corrected:
    case Recipe::dim1_erroneous: return Mode::resolving(1);
    }
    throw Error("unknown recipe");
}

auto check_erroneous_set(int n) -> ErroneousSetReport
{
    const int k = snark_k(n);
    auto g = flower_snark(n);
    auto dm = all_pairs_distances(g);
    ErroneousSetReport rep;
    rep.erroneous = recipe_set(Recipe::dim1_erroneous, n);
    rep.corrected = recipe_set(Recipe::dim1_corrected, n);

    std::vector<DistanceArray> arrays;
    for (Vertex v = 0; v < g.size(); ++v)
        arrays.push_back(distance_array(dm, rep.erroneous, VertexSet{v}));
    for (Vertex v = 0; v < g.size(); ++v)
        for (Vertex w = v + 1; w < g.size(); ++w)
            if (arrays[static_cast<std::size_t>(v)] == arrays[static_cast<std::size_t>(w)])
                rep.collisions.emplace_back(v, w);

    auto at = [&](char role, int i) { return arrays[static_cast<std::size_t>(snark_vertex(n, role, i))]; };
    rep.a1 = at('a', 1);
    rep.bn = at('b', n);
    rep.ak = at('a', k);
    rep.bk1 = at('b', k + 1);
    const auto d = [](int x) { return static_cast<Distance>(x); };
    rep.named_collisions_hold = rep.a1 == rep.bn && rep.a1 == DistanceArray{d(2), d(2), d(k + 1)} &&
        rep.ak == rep.bk1 && rep.ak == DistanceArray{d(k + 1), d(k + 1), d(2)};
    rep.corrected_resolves = is_l_resolving(dm, rep.corrected, 1).holds;
    return rep;
}

namespace {
    struct StarSets {
        VertexSet b, x, y, z;
    };

    auto star_sets(int n, int i) -> StarSets
    {
        require_snark_n(n);
        if (i < 1 || i > n)
            throw Error("star index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        auto b = snark_set(n, {{'b', i - 1}, {'b', i + 1}});
        return {b, b.with(snark_vertex(n, 'a', i)), b.with(snark_vertex(n, 'c', i)), b.with(snark_vertex(n, 'd', i))};
    }

    auto set_distance(const DistanceMatrix & dm, Vertex s, const VertexSet & x) -> int
    {
        Distance best = dm(s, x[0]);
        for (auto v : x)
            best = std::min(best, dm(s, v));
        return best;
    }
}

auto verify_borthree(int n, int i) -> Verdict<StarLemmaViolation>
{
    auto sets = star_sets(n, i);
    auto g = flower_snark(n);
    auto dm = all_pairs_distances(g);
    // rows b, x, y, z for s = a_i, b_i, c_i, d_i
    const std::array<std::pair<char, std::array<int, 4>>, 4> table{{
        {'b', {3, 1, 1, 1}},
        {'a', {2, 0, 2, 2}},
        {'c', {2, 2, 0, 2}},
        {'d', {2, 2, 2, 0}},
    }};
    for (Vertex s = 0; s < g.size(); ++s) {
        const std::array<int, 4> got{set_distance(dm, s, sets.b), set_distance(dm, s, sets.x),
            set_distance(dm, s, sets.y), set_distance(dm, s, sets.z)};
        const auto detail = g.label(s) + " has distances (" + std::to_string(got[0]) + "," + std::to_string(got[1]) +
            "," + std::to_string(got[2]) + "," + std::to_string(got[3]) + ") to B, X, Y, Z";
        if (snark_index(n, s) == wrap(i, n)) {
            for (const auto & [role, want] : table)
                if (role == snark_role(n, s) && got != want)
                    return Verdict<StarLemmaViolation>::fail({s, detail});
        }
        else if (got[1] != got[0] || got[2] != got[0] || got[3] != got[0])
            return Verdict<StarLemmaViolation>::fail({s, detail});
    }
    return Verdict<StarLemmaViolation>::pass();
}

auto verify_3vs3(int n, int i) -> Verdict<StarLemmaViolation>
{
    auto sets = star_sets(n, i);
    auto g = flower_snark(n);
    auto dm = all_pairs_distances(g);
    struct Pair {
        const VertexSet * p;
        const VertexSet * q;
        const char * name;
        VertexSet expected;
    };
    const std::array<Pair, 3> pairs{{
        {&sets.x, &sets.y, "X/Y", snark_set(n, {{'a', i}, {'c', i}})},
        {&sets.x, &sets.z, "X/Z", snark_set(n, {{'a', i}, {'d', i}})},
        {&sets.y, &sets.z, "Y/Z", snark_set(n, {{'c', i}, {'d', i}})},
    }};
    for (const auto & pr : pairs)
        for (Vertex s = 0; s < g.size(); ++s) {
            const bool separates = set_distance(dm, s, *pr.p) != set_distance(dm, s, *pr.q);
            if (separates != pr.expected.contains(s))
                return Verdict<StarLemmaViolation>::fail({s, g.label(s) + (separates ? " separates " : " fails to separate ") + pr.name});
        }
    return Verdict<StarLemmaViolation>::pass();
}

auto gap_statistics(const VertexSet & s, int n) -> GapStatistics
{
    const int k = snark_k(n);
    s.check_range(4 * n);
    auto longest_missing = [&](const std::vector<Vertex> & cycle) {
        const int len = static_cast<int>(cycle.size());
        int best = 0, run = 0;
        // two laps catch runs that wrap around
        for (int t = 0; t < 2 * len; ++t) {
            run = s.contains(cycle[static_cast<std::size_t>(t % len)]) ? 0 : run + 1;
            best = std::max(best, run);
        }
        return std::min(best, len);
    };
    std::vector<Vertex> a_cycle, c_cycle;
    for (int i = 1; i <= n; ++i)
        a_cycle.push_back(snark_vertex(n, 'a', i));
    for (int i = 1; i <= n; ++i)
        c_cycle.push_back(snark_vertex(n, 'c', i));
    for (int i = 1; i <= n; ++i)
        c_cycle.push_back(snark_vertex(n, 'd', i));
    GapStatistics out;
    out.a_gap = longest_missing(a_cycle);
    out.c_gap = longest_missing(c_cycle);
    out.a_violation = out.a_gap > k - 1;
    out.c_violation = out.c_gap > k;
    return out;
}

auto to_string(ReductionVariant v) -> std::string
{
    return v == ReductionVariant::literal ? "literal" : "twisted";
}

auto reduction_map(int n, ReductionVariant variant) -> ReductionMap
{
    require_snark_n(n);
    if (n < 7)
        throw Error("reduction map needs n >= 7");
    ReductionMap map{n, n - 2, (n - 1) / 2, (n - 3) / 2, variant, {}, {}};
    map.image.resize(static_cast<std::size_t>(4 * n));
    map.preimages.resize(static_cast<std::size_t>(4 * map.m));
    for (Vertex v = 0; v < 4 * n; ++v) {
        char role = snark_role(n, v);
        const int i = snark_index(n, v);
        int j = i == n ? 1 : (i <= map.k ? i : i - 1);
        if (variant == ReductionVariant::twisted && i == n && (role == 'c' || role == 'd'))
            role = role == 'c' ? 'd' : 'c';
        const auto w = snark_vertex(map.m, role, j);
        map.image[static_cast<std::size_t>(v)] = w;
        map.preimages[static_cast<std::size_t>(w)].push_back(v);
    }
    return map;
}

auto admissible_vertices(int n) -> VertexSet
{
    const int k = snark_k(n);
    const std::array<int, 8> band{1, 2, k - 1, k, k + 1, k + 2, n - 1, n};
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < 4 * n; ++v)
        if (std::find(band.begin(), band.end(), snark_index(n, v)) == band.end())
            vs.push_back(v);
    return VertexSet(std::move(vs));
}

auto reduction_distance_check(const ReductionMap & map, const DistanceMatrix & dn, const DistanceMatrix & dm,
    const VertexSet & s) -> Verdict<ReductionViolation>
{
    const auto allowed = admissible_vertices(map.n);
    if (! s.is_subset_of(allowed))
        throw Error("reduction check needs S outside stars 1, 2, k-1, k, k+1, k+2, n-1, n");
    const int m = map.m, l = map.l;
    enum Side { left, right, other };
    auto side = [&](int j) { return (2 <= j && j <= l) ? left : (l + 2 <= j && j <= m) ? right : other; };

    for (auto sv : s) {
        const auto r = map.image[static_cast<std::size_t>(sv)];
        const auto rs = side(snark_index(m, r));
        for (Vertex v = 0; v < 4 * m; ++v) {
            const int want = dm(r, v);
            const auto & pre = map.preimages[static_cast<std::size_t>(v)];
            const int jv = snark_index(m, v);
            if (jv == 1 || jv == l + 1) {
                // low: star 1 (resp. k); high: star n (resp. k+1)
                const int low_star = jv == 1 ? 1 : map.k;
                Vertex low = pre[0], high = pre[1];
                if (snark_index(map.n, low) != low_star)
                    std::swap(low, high);
                const Vertex near = rs == left ? low : high;
                const Vertex far = near == low ? high : low;
                if (dn(sv, near) != want)
                    return Verdict<ReductionViolation>::fail({sv, v, near, want, dn(sv, near)});
                if (dn(sv, far) - 1 != want)
                    return Verdict<ReductionViolation>::fail({sv, v, far, want, dn(sv, far) - 1});
            }
            else {
                const Vertex vp = pre[0];
                const int got = side(jv) == rs ? dn(sv, vp) : dn(sv, vp) - 1;
                if (got != want)
                    return Verdict<ReductionViolation>::fail({sv, v, vp, want, got});
            }
        }
    }
    return Verdict<ReductionViolation>::pass();
}

auto reduction_distance_check(int n, const VertexSet & s, ReductionVariant variant) -> Verdict<ReductionViolation>
{
    auto map = reduction_map(n, variant);
    auto dn = all_pairs_distances(flower_snark(n));
    auto dm = all_pairs_distances(flower_snark(n - 2));
    return reduction_distance_check(map, dn, dm, s);
}

auto star_distance(const Graph & g, const DistanceMatrix & dm, Vertex u, Vertex v) -> int
{
    if (g.size() % 4 != 0 || g.size() < 20)
        throw Error("star distance needs a flower snark");
    const int n = g.size() / 4;
    if (u < 0 || v < 0 || u >= g.size() || v >= g.size())
        throw Error("vertex out of range");
    // stars met, minimised over shortest paths from u, processed by distance
    std::vector<Vertex> order(static_cast<std::size_t>(g.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return dm(u, x) < dm(u, y); });
    std::vector<int> best(static_cast<std::size_t>(g.size()), std::numeric_limits<int>::max());
    best[static_cast<std::size_t>(u)] = 1;
    for (auto w : order) {
        if (w == u)
            continue;
        for (auto p : g.neighbours(w))
            if (dm(u, p) + 1 == dm(u, w))
                best[static_cast<std::size_t>(w)] = std::min(best[static_cast<std::size_t>(w)],
                    best[static_cast<std::size_t>(p)] + (star_of(p, n) != star_of(w, n)));
    }
    return best[static_cast<std::size_t>(v)] - 1;
}

auto star_distance(Vertex u, Vertex v, int n) -> int
{
    auto g = flower_snark(n);
    return star_distance(g, all_pairs_distances(g), u, v);
}

auto l2_window_check(int n) -> WindowCheck
{
    const int k = snark_k(n);
    if (n < 9)
        throw Error("window check needs n >= 9");
    const int m = n - 2, km = (m - 1) / 2;
    auto dm = all_pairs_distances(flower_snark(m));
    auto stars = [&](std::initializer_list<int> idx) {
        std::vector<Vertex> vs;
        for (int i : idx)
            for (char role : {'a', 'b', 'c', 'd'})
                vs.push_back(snark_vertex(m, role, i));
        return vs;
    };
    const auto near_left = stars({m - 1, m, 1, 2, 3, 4});
    const auto near_right = stars({km - 1, km, km + 1, km + 2, km + 3, km + 4});
    const auto s_left = snark_set(m, {{'a', 1}, {'c', 1}, {'d', 1}, {'a', 2}});
    const auto s_right = snark_set(m, {{'a', km + 1}, {'a', km + 2}, {'c', km + 2}, {'d', km + 2}});

    WindowCheck out{0, std::numeric_limits<int>::max(), k, false};
    auto scan = [&](const VertexSet & s, const std::vector<Vertex> & near, const std::vector<Vertex> & far) {
        for (auto sv : s) {
            for (auto v : near)
                out.near_max = std::max(out.near_max, int{dm(sv, v)});
            for (auto u : far)
                out.far_min = std::min(out.far_min, int{dm(sv, u)});
        }
    };
    scan(s_left, near_left, near_right);
    scan(s_right, near_right, near_left);
    out.holds = out.near_max <= 5 && 5 <= k - 4 && k - 4 <= out.far_min;
    return out;
}

namespace {
    using Job = std::function<SuiteRecord()>;

    auto timed(int n, std::string name, std::function<std::pair<bool, std::optional<std::string>>()> body) -> Job
    {
        return [n, name = std::move(name), body = std::move(body)] {
            const auto start = std::chrono::steady_clock::now();
            auto [holds, witness] = body();
            const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return SuiteRecord{n, name, holds, std::move(witness), ms};
        };
    }

    auto witness_text(const Graph & g, const Witness & w) -> std::string
    {
        if (const auto * c = std::get_if<SetCollision>(&w))
            return set_string(g, c->first) + " and " + set_string(g, c->second) + " share an array";
        if (const auto * f = std::get_if<SeparationFailure>(&w))
            return g.label(f->x) + " is not separated from " + set_string(g, f->ys);
        const auto & p = std::get<UnresolvedPair>(w);
        return g.label(p.v) + " and " + g.label(p.w) + " are not doubly resolved";
    }

    auto dimension_job(int n, std::string name, Mode mode, int expected, const SuiteConfig & config) -> Job
    {
        return timed(n, std::move(name), [=]() -> std::pair<bool, std::optional<std::string>> {
            auto g = flower_snark(n);
            SearchConfig sc;
            sc.mode = mode;
            sc.budget_seconds = config.budget_seconds;
            auto r = metric_dimension(g, sc);
            if (! r.exact)
                return {false, "budget exhausted; dimension unknown, at least " + std::to_string(r.value)};
            if (r.value != expected)
                return {false, "dimension " + std::to_string(r.value) + " with basis " + set_string(g, *r.basis)};
            return {true, std::nullopt};
        });
    }
}

auto run_snark_suite(const SuiteConfig & config) -> std::vector<SuiteRecord>
{
    if (config.n_min > config.n_max)
        throw Error("empty n range");
    if (config.n_max < 5 || (config.n_min == config.n_max && config.n_min % 2 == 0))
        throw Error("n range contains no odd n >= 5");
    std::vector<Job> jobs;
    for (int n = config.n_min; n <= config.n_max; ++n) {
        if (n < 5 || n % 2 == 0)
            continue;
        const int k = snark_k(n);

        for (auto r : {Recipe::l3, Recipe::solid2, Recipe::l2, Recipe::solid1, Recipe::dim1_corrected}) {
            if (r == Recipe::l2 && n < 7)
                continue;
            jobs.push_back(timed(n, "recipe-" + to_string(r), [n, r]() -> std::pair<bool, std::optional<std::string>> {
                auto g = flower_snark(n);
                auto dm = all_pairs_distances(g);
                auto s = recipe_set(r, n);
                const std::map<Recipe, int> sizes{{Recipe::l3, 3 * n}, {Recipe::solid2, n + 5}, {Recipe::l2, 8},
                    {Recipe::solid1, 6}, {Recipe::dim1_corrected, 3}};
                if (s.size() != sizes.at(r))
                    return {false, "size " + std::to_string(s.size())};
                auto v = check_mode(dm, s, recipe_mode(r));
                if (! v.holds)
                    return {false, witness_text(g, *v.witness)};
                return {true, std::nullopt};
            }));
        }

        jobs.push_back(timed(n, "erroneous-set", [n]() -> std::pair<bool, std::optional<std::string>> {
            auto rep = check_erroneous_set(n);
            const bool ok = rep.named_collisions_hold && rep.corrected_resolves && rep.collisions.size() == 2;
            if (ok)
                return {true, std::nullopt};
            return {false, std::to_string(rep.collisions.size()) + " collisions; a1 " + array_string(rep.a1) + ", b" +
                    std::to_string(n) + " " + array_string(rep.bn)};
        }));

        jobs.push_back(timed(n, "star-distance-table", [n]() -> std::pair<bool, std::optional<std::string>> {
            for (int i = 1; i <= n; ++i)
                if (auto v = verify_borthree(n, i); ! v.holds)
                    return {false, "i=" + std::to_string(i) + ": " + v.witness->detail};
            return {true, std::nullopt};
        }));
        jobs.push_back(timed(n, "leaf-distinguishers", [n]() -> std::pair<bool, std::optional<std::string>> {
            for (int i = 1; i <= n; ++i)
                if (auto v = verify_3vs3(n, i); ! v.holds)
                    return {false, "i=" + std::to_string(i) + ": " + v.witness->detail};
            return {true, std::nullopt};
        }));
        jobs.push_back(timed(n, "solid2-gaps", [n, k]() -> std::pair<bool, std::optional<std::string>> {
            auto gs = gap_statistics(recipe_set(Recipe::solid2, n), n);
            if (gs.a_violation || gs.c_violation)
                return {false, "a-gap " + std::to_string(gs.a_gap) + ", c-gap " + std::to_string(gs.c_gap) +
                        " with k=" + std::to_string(k)};
            return {true, std::nullopt};
        }));

        jobs.push_back(timed(n, "b-or-leaves-rule", [n, seed = config.seed]() -> std::pair<bool, std::optional<std::string>> {
            auto g = flower_snark(n);
            auto dm = all_pairs_distances(g);
            SeparationTable table(dm);
            std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(n));
            for (int trial = 0; trial < 40; ++trial) {
                std::vector<Vertex> vs;
                for (Vertex v = 0; v < g.size(); ++v)
                    if (rng() % 4 != 0)
                        vs.push_back(v);
                auto s = VertexSet(std::move(vs));
                const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n)) + 1;
                const char leaf = "acd"[rng() % 3];
                s = s.without(snark_vertex(n, 'b', i)).without(snark_vertex(n, leaf, i));
                if (is_l_solid(table, s, 2).holds)
                    return {false, set_string(g, s) + " is 2-solid"};
            }
            return {true, std::nullopt};
        }));

        jobs.push_back(timed(n, "forced-closed-form", [n]() -> std::pair<bool, std::optional<std::string>> {
            auto g = flower_snark(n);
            auto dm = all_pairs_distances(g);
            for (int ell = 1; ell <= 3; ++ell)
                if (! forced_vertices(g, dm, ell, ForcedKind::resolving).empty())
                    return {false, "resolving order " + std::to_string(ell) + " forces vertices"};
            for (int ell = 1; ell <= 2; ++ell)
                if (! forced_vertices(g, dm, ell, ForcedKind::solid).empty())
                    return {false, "solid order " + std::to_string(ell) + " forces vertices"};
            const auto all = VertexSet::all(g.size());
            if (forced_vertices(g, dm, 4, ForcedKind::resolving) != all)
                return {false, "resolving order 4 leaves vertices unforced"};
            if (forced_vertices(g, dm, 3, ForcedKind::solid) != all)
                return {false, "solid order 3 leaves vertices unforced"};
            return {true, std::nullopt};
        }));

        const int l1_limit = config.long_run ? 39 : 9;
        const int l2_limit = config.long_run ? 19 : 7;
        jobs.push_back(dimension_job(n, "dimension-resolving-1", Mode::resolving(1), 3, config));
        if (n <= l1_limit)
            jobs.push_back(dimension_job(n, "dimension-solid-1", Mode::solid(1), 6, config));
        if (n <= l2_limit)
            jobs.push_back(dimension_job(n, "dimension-resolving-2", Mode::resolving(2), n == 5 ? 7 : 8, config));
        if (n == 5) {
            jobs.push_back(dimension_job(n, "dimension-resolving-3", Mode::resolving(3), 3 * n, config));
            jobs.push_back(dimension_job(n, "dimension-solid-2", Mode::solid(2), n + 5, config));
        }

        if (n >= 9)
            jobs.push_back(timed(n, "reduction-relations", [n, config]() -> std::pair<bool, std::optional<std::string>> {
                auto map = reduction_map(n);
                auto gn = flower_snark(n);
                auto dn = all_pairs_distances(gn);
                auto gm = flower_snark(n - 2);
                auto dm = all_pairs_distances(gm);
                auto pool = admissible_vertices(n).vector();
                const int size = std::min<int>(5, static_cast<int>(pool.size()));
                std::mt19937_64 rng(config.seed * 7919 + static_cast<std::uint64_t>(n));
                for (int t = 0; t < config.reduction_samples; ++t) {
                    std::shuffle(pool.begin(), pool.end(), rng);
                    VertexSet s(std::vector<Vertex>(pool.begin(), pool.begin() + size));
                    if (auto v = reduction_distance_check(map, dn, dm, s); ! v.holds) {
                        const auto & w = *v.witness;
                        return {false, "s=" + gn.label(w.s) + " v=" + gm.label(w.v) + " v'=" + gn.label(w.v_pre) +
                                ": expected " + std::to_string(w.expected) + ", got " + std::to_string(w.actual)};
                    }
                }
                return {true, std::nullopt};
            }));

        if (n >= 21)
            jobs.push_back(timed(n, "eight-set-window", [n]() -> std::pair<bool, std::optional<std::string>> {
                auto w = l2_window_check(n);
                if (w.holds)
                    return {true, std::nullopt};
                return {false, "near max " + std::to_string(w.near_max) + ", far min " + std::to_string(w.far_min)};
            }));
    }

    std::vector<std::optional<SuiteRecord>> slots(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();)
            slots[j] = jobs[j]();
    };
    const int workers = std::max(1, config.workers);
    if (workers == 1)
        worker();
    else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();
    }
    std::vector<SuiteRecord> out;
    for (auto & s : slots)
        out.push_back(std::move(*s));
    return out;
}

} // namespace lres
