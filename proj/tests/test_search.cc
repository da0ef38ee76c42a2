#include "corpus.hh"
#include "oracles.hh"

#include "lres/combinations.hh"
#include "lres/errors.hh"
#include "lres/generators.hh"
#include "lres/search.hh"
#include "lres/snark.hh"

#include <doctest.h>

using namespace lres;
using namespace lres::testing;

namespace {
auto search(const Graph & g, Mode mode, int workers = 1, bool prefilter = true) -> DimensionResult
{
    SearchConfig c;
    c.mode = mode;
    c.workers = workers;
    c.prefilter = prefilter;
    c.budget_seconds = 120;
    return metric_dimension(g, c);
}

// first passing set in size-then-colex order, by definition-level checks
auto brute_minimum(const Graph & g, Mode mode) -> VertexSet
{
    auto ref = floyd_warshall(g);
    for (int k = 1; k <= g.size(); ++k) {
        std::optional<VertexSet> hit;
        for_each_combination(g.size(), k, [&](std::span<const int> c) {
            std::vector<int> members(c.begin(), c.end());
            bool ok = mode.kind == Kind::doubly ? (k >= 2 && brute_doubly(ref, members))
                                                : brute_distinguishes(ref, members, mode.order, mode.kind == Kind::solid);
            if (ok)
                hit = VertexSet(members);
            return ! ok;
        });
        if (hit)
            return *hit;
    }
    throw Error("no passing set");
}
}

TEST_CASE("snark and star dimensions")
{
    auto j5 = flower_snark(5);
    auto r = search(j5, Mode::resolving(2));
    CHECK(r.exact);
    CHECK(r.value == 7);
    REQUIRE(r.basis);
    CHECK(is_l_resolving(all_pairs_distances(j5), *r.basis, 2).holds);

    CHECK(search(j5, Mode::resolving(1)).value == 3);
    auto star = search(star_graph(3), Mode::solid(2));
    CHECK(star.exact);
    CHECK(star.value == 3);
}

TEST_CASE("lower bounds")
{
    auto has = [](const std::vector<LowerBound> & bs, int value, BoundSource src) {
        return std::any_of(bs.begin(), bs.end(), [&](const LowerBound & b) { return b.value == value && b.source == src; });
    };
    auto c5 = cycle_graph(5);
    CHECK(has(dimension_lower_bounds(c5, all_pairs_distances(c5), Mode::solid(3)), 4, BoundSource::ell_plus_one));
    auto rook = rook_graph(3, 3);
    CHECK(has(dimension_lower_bounds(rook, all_pairs_distances(rook), Mode::solid(2)), 9, BoundSource::forced_count));
    auto p5 = path_graph(5);
    CHECK(has(dimension_lower_bounds(p5, all_pairs_distances(p5), Mode::resolving(1)), 1, BoundSource::trivial));
}

TEST_CASE("basis certificates")
{
    auto j5 = flower_snark(5);
    auto dm = all_pairs_distances(j5);
    auto known_basis = snark_set(5, {{'a', 1}, {'a', 3}, {'b', 2}, {'b', 4}, {'c', 1}, {'c', 3}, {'d', 1}});
    CHECK(verify_basis_certificate(j5, dm, Mode::resolving(2), known_basis).status == CertificateStatus::certified);

    auto solid1 = snark_set(5, {{'a', 1}, {'a', 4}, {'c', 1}, {'d', 1}, {'c', 3}, {'d', 3}});
    CHECK(solid1 == recipe_set(Recipe::solid1, 5));
    CHECK(verify_basis_certificate(j5, dm, Mode::solid(1), solid1).status == CertificateStatus::certified);

    auto k2 = complete_graph(2);
    CHECK(verify_basis_certificate(k2, all_pairs_distances(k2), Mode::resolving(1), VertexSet{0}).status ==
        CertificateStatus::certified);

    auto big = known_basis.with(snark_vertex(5, 'd', 3));
    auto cert = verify_basis_certificate(j5, dm, Mode::resolving(2), big);
    CHECK(cert.status == CertificateStatus::smaller_exists);
    REQUIRE(cert.smaller);
    CHECK(is_l_resolving(dm, *cert.smaller, 2).holds);

    CHECK(verify_basis_certificate(j5, dm, Mode::resolving(2), snark_set(5, {{'a', 1}})).status ==
        CertificateStatus::not_passing);
}

TEST_CASE("budget exhaustion yields a partial result")
{
    SearchConfig c;
    c.mode = Mode::resolving(2);
    c.budget_seconds = 0.05;
    auto r = metric_dimension(flower_snark(9), c);
    CHECK_FALSE(r.exact);
    CHECK_FALSE(r.basis);
    CHECK(r.value >= r.lower_bound.value);
    CHECK(r.value <= 8);

    c.budget_seconds = 0;
    CHECK_THROWS_AS(metric_dimension(flower_snark(5), c), Error);
}

TEST_CASE("search properties on a random corpus")
{
    const std::vector<Mode> modes{Mode::resolving(1), Mode::resolving(2), Mode::resolving(3), Mode::solid(1),
        Mode::solid(2), Mode::doubly()};
    for (const auto & g : random_corpus(77, 40, 8)) {
        auto dm = all_pairs_distances(g);
        for (auto mode : modes) {
            if (mode.kind == Kind::solid && mode.order > g.size() - 1)
                continue;
            if (mode.kind == Kind::resolving && mode.order > g.size())
                continue;
            if (mode.kind == Kind::doubly && g.size() < 2)
                continue;
            auto r = search(g, mode);
            REQUIRE(r.exact);
            REQUIRE(r.basis);
            CHECK(check_mode(dm, *r.basis, mode).holds);
            CHECK(*r.basis == brute_minimum(g, mode));
            for (const auto & b : dimension_lower_bounds(g, dm, mode))
                CHECK(r.value >= b.value);

            auto threaded = search(g, mode, 3);
            CHECK(threaded.value == r.value);
            CHECK(*threaded.basis == *r.basis);
            if (mode.kind == Kind::resolving)
                CHECK(search(g, mode, 1, false).value == r.value);

            if (r.value >= 1) {
                SearchConfig below;
                below.mode = mode;
                below.min_size = r.value - 1;
                below.max_size = r.value - 1;
                auto none = metric_dimension(g, dm, below);
                CHECK_FALSE(none.basis);
            }
        }
    }
}
