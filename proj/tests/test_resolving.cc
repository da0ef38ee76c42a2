#include "corpus.hh"
#include "oracles.hh"

#include "lres/combinations.hh"
#include "lres/errors.hh"
#include "lres/generators.hh"
#include "lres/resolving.hh"

#include <doctest.h>

using namespace lres;
using namespace lres::testing;

namespace {
struct HFixture {
    Graph g = graph_h();
    DistanceMatrix dm = all_pairs_distances(g);

    auto set(std::initializer_list<int> one_based) const -> VertexSet
    {
        std::vector<Vertex> vs;
        for (int v : one_based)
            vs.push_back(v - 1);
        return VertexSet(vs);
    }

    auto r1() const { return set({2, 3, 7}); }
    auto r2() const { return set({1, 2, 3, 4, 8, 9}); }
    auto s1() const { return set({1, 2, 3, 7, 8}); }
    auto s2() const { return set({1, 2, 3, 4, 6, 8, 9}); }
};

auto arr(std::initializer_list<int> xs) -> DistanceArray
{
    DistanceArray out;
    for (int x : xs)
        out.push_back(static_cast<Distance>(x));
    return out;
}
}

TEST_CASE("combinatorial helpers")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(subsets_up_to(9, 2) == 45);
    int count = 0;
    std::vector<int> c(3);
    for_each_combination(7, 3, [&](std::span<const int> comb) {
        CHECK(colex_rank(comb) == static_cast<std::uint64_t>(count));
        colex_unrank(static_cast<std::uint64_t>(count), c);
        CHECK(std::equal(c.begin(), c.end(), comb.begin()));
        ++count;
        return true;
    });
    CHECK(count == 35);
}

TEST_CASE("distance arrays on H")
{
    HFixture h;
    CHECK(distance_array(h.dm, h.r1(), h.set({6})) == arr({2, 3, 1}));
    CHECK(distance_array(h.dm, h.r2(), h.set({6})) == arr({3, 2, 3, 2, 2, 2}));
    CHECK(distance_array(h.dm, h.r2(), h.set({8, 9})) == arr({3, 2, 3, 2, 0, 0}));
    CHECK(distance_array(h.dm, h.s1(), h.set({6, 8})) == arr({3, 2, 3, 1, 0}));
    CHECK(distance_array(h.dm, h.s2(), h.set({5, 6, 7})) == arr({2, 1, 2, 1, 0, 1, 1}));
    CHECK(distance_array(h.dm, h.set({4}), h.set({4})) == arr({0}));
    CHECK_THROWS_AS(distance_array(h.dm, VertexSet{}, h.set({4})), Error);
}

TEST_CASE("resolving checks on H")
{
    HFixture h;
    CHECK(is_l_resolving(h.dm, h.r1(), 1).holds);
    CHECK(is_l_resolving(h.dm, h.r2(), 2).holds);

    auto s1 = is_l_resolving(h.dm, h.s1(), 2);
    REQUIRE_FALSE(s1.holds);
    // the pair named alongside the example also refutes S1
    CHECK(witness_refutes(h.dm, h.s1(), Mode::resolving(2), SetCollision{h.set({8, 9}), h.set({6, 8})}));
    CHECK(witness_refutes(h.dm, h.s1(), Mode::resolving(2), *s1.witness));
    const auto & c = std::get<SetCollision>(*s1.witness);
    CHECK(c.first == h.set({2, 4}));
    CHECK(c.second == h.set({2, 6}));

    CHECK_THROWS_AS(is_l_resolving(h.dm, h.r1(), 0), Error);
    CHECK_THROWS_AS(is_l_resolving(h.dm, h.r1(), 10), Error);
}

TEST_CASE("solid checks on H")
{
    HFixture h;
    CHECK(is_l_solid(h.dm, h.s2(), 2).holds);
    CHECK(is_l_solid_oracle(h.dm, h.s2(), 2).holds);
    CHECK(is_l_solid_oracle(h.dm, h.s1(), 1).holds);
    CHECK(is_l_solid(h.dm, h.s1(), 1).holds);

    auto r2 = is_l_solid(h.dm, h.r2(), 2);
    REQUIRE_FALSE(r2.holds);
    CHECK(witness_refutes(h.dm, h.r2(), Mode::solid(2), SeparationFailure{5, h.set({5, 7})}));
    CHECK(witness_refutes(h.dm, h.r2(), Mode::solid(2), *r2.witness));
    const auto & f = std::get<SeparationFailure>(*r2.witness);
    CHECK(f.x == 4);
    CHECK(f.ys == h.set({1, 8}));
    CHECK(distance_array(h.dm, h.r2(), h.set({5, 7})) == arr({2, 1, 2, 1, 1, 1}));
    CHECK(distance_array(h.dm, h.r2(), h.set({5, 6, 7})) == arr({2, 1, 2, 1, 1, 1}));

    CHECK(is_l_solid(h.dm, VertexSet::all(9), 8).holds);
    CHECK_THROWS_AS(is_l_solid(h.dm, h.s2(), 9), Error);

    auto k2 = complete_graph(2);
    auto dk2 = all_pairs_distances(k2);
    auto oracle = is_l_solid_oracle(dk2, VertexSet{0}, 1);
    REQUIRE_FALSE(oracle.holds);
    const auto & col = std::get<SetCollision>(*oracle.witness);
    CHECK(col.first == VertexSet{0});
    CHECK(col.second == VertexSet{0, 1});
    CHECK_THROWS_AS(is_l_solid_oracle(all_pairs_distances(path_graph(13)), VertexSet{0}, 1), Error);
}

TEST_CASE("necessary condition and doubly resolving sets")
{
    HFixture h;
    CHECK(necessary_resolving_condition(h.dm, h.r2(), 2).holds);
    // S1 is 1-solid, so the condition holds even though S1 is not {2}-resolving
    CHECK(necessary_resolving_condition(h.dm, h.s1(), 2).holds);
    CHECK_FALSE(witness_refutes(h.dm, h.s1(), Mode::resolving(2), SeparationFailure{5, h.set({8})}));
    CHECK_FALSE(necessary_resolving_condition(h.dm, h.set({1, 2, 3}), 2).holds);
    CHECK(necessary_resolving_condition(h.dm, VertexSet::all(9), 2).holds);
    CHECK_THROWS_AS(necessary_resolving_condition(h.dm, h.r2(), 1), Error);

    CHECK(is_doubly_resolving(h.dm, h.s1()).holds);
    auto p3 = all_pairs_distances(path_graph(3));
    auto ref = floyd_warshall(path_graph(3));
    CHECK(is_doubly_resolving(p3, VertexSet{0, 2}).holds == brute_doubly(ref, {0, 2}));
    CHECK(is_doubly_resolving(p3, VertexSet{0, 2}).holds);
    auto bad = is_doubly_resolving(p3, VertexSet{0, 1});
    CHECK(bad.holds == brute_doubly(ref, {0, 1}));
    REQUIRE_FALSE(bad.holds);
    const auto & pair = std::get<UnresolvedPair>(*bad.witness);
    CHECK(pair.v == 1);
    CHECK(pair.w == 2);
    CHECK_THROWS_AS(is_doubly_resolving(p3, VertexSet{0}), Error);
}

TEST_CASE("forced vertices")
{
    HFixture h;
    auto f = forced_vertices(h.g, h.dm, 1, ForcedKind::solid);
    CHECK(f.contains(0));
    CHECK(f.contains(2));
    CHECK(f == forced_vertices_oracle(h.g, h.dm, 1, ForcedKind::solid));
    CHECK(forced_vertices(h.g, h.dm, 2, ForcedKind::resolving).contains(0));
    CHECK(forced_vertices(h.g, h.dm, 2, ForcedKind::resolving).contains(2));

    auto rook = rook_graph(3, 3);
    CHECK(forced_vertices(rook, all_pairs_distances(rook), 2, ForcedKind::solid) == VertexSet::all(9));

    auto j5 = flower_snark(5);
    CHECK(forced_vertices(j5, all_pairs_distances(j5), 3, ForcedKind::resolving).empty());

    // trees: forced for l-solid iff deg(v) <= l
    auto p4 = path_graph(4);
    auto dp4 = all_pairs_distances(p4);
    CHECK(forced_vertices(p4, dp4, 1, ForcedKind::solid) == VertexSet{0, 3});
    CHECK(forced_vertices_oracle(p4, dp4, 1, ForcedKind::solid) == VertexSet{0, 3});

    auto k2 = complete_graph(2);
    CHECK(forced_vertices(k2, all_pairs_distances(k2), 1, ForcedKind::resolving).empty());
    CHECK(forced_vertices_oracle(k2, all_pairs_distances(k2), 1, ForcedKind::resolving).empty());
}

TEST_CASE("checkers agree with definition-level oracles on a random corpus")
{
    for (const auto & g : random_corpus(2024, 60, 7)) {
        auto dm = all_pairs_distances(g);
        auto ref = floyd_warshall(g);
        const int n = g.size();
        for (int ell = 1; ell <= 3; ++ell) {
            auto bf = brute_forced(g, ell);
            CHECK(forced_vertices(g, dm, ell, ForcedKind::solid).vector() == bf);
            auto bf_res = ell == 1 ? std::vector<int>{} : brute_forced(g, ell - 1);
            CHECK(forced_vertices(g, dm, ell, ForcedKind::resolving).vector() == bf_res);
        }
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            auto members = mask_members(mask);
            VertexSet s(members);
            for (int ell = 1; ell <= std::min(3, n); ++ell) {
                auto res = is_l_resolving(dm, s, ell);
                REQUIRE(res.holds == brute_distinguishes(ref, members, ell, false));
                if (! res.holds)
                    REQUIRE(witness_refutes(dm, s, Mode::resolving(ell), *res.witness));
                ResolvingOptions sorted;
                sorted.memory_cap_bytes = 0;
                auto fallback = is_l_resolving(dm, s, ell, sorted);
                REQUIRE(fallback.holds == res.holds);
                if (! res.holds) {
                    const auto & a = std::get<SetCollision>(*res.witness);
                    const auto & b = std::get<SetCollision>(*fallback.witness);
                    REQUIRE(a.first == b.first);
                    REQUIRE(a.second == b.second);
                }
                if (ell <= n - 1) {
                    auto sol = is_l_solid(dm, s, ell);
                    REQUIRE(sol.holds == brute_distinguishes(ref, members, ell, true));
                    if (! sol.holds)
                        REQUIRE(witness_refutes(dm, s, Mode::solid(ell), *sol.witness));
                }
            }
            if (n >= 2 && s.size() >= 2)
                REQUIRE(is_doubly_resolving(dm, s).holds == brute_doubly(ref, members));
        }
    }
}

TEST_CASE("mode parsing")
{
    CHECK(parse_kind("solid") == Kind::solid);
    CHECK(to_string(Mode::resolving(2)) == "resolving(2)");
    CHECK(to_string(Mode::doubly()) == "doubly");
    CHECK_THROWS_AS(parse_kind("fuzzy"), Error);
    CHECK_THROWS_AS(Mode::solid(5).validate(5), Error);
    CHECK_NOTHROW(Mode::resolving(5).validate(5));
}
