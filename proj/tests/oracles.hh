#pragma once

// Definition-level reference implementations, sharing no code with the library
// beyond the Graph adjacency.

#include "lres/graph.hh"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace lres::testing {

using Matrix = std::vector<std::vector<int>>;

inline auto floyd_warshall(const Graph & g) -> Matrix
{
    const int n = g.size(), inf = 1 << 20;
    Matrix d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (auto u : g.neighbours(v))
            d[v][u] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline auto mask_members(std::uint32_t mask) -> std::vector<int>
{
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1u)
            out.push_back(v);
    return out;
}

inline auto array_of(const Matrix & d, const std::vector<int> & s, std::uint32_t x) -> std::vector<int>
{
    std::vector<int> a;
    for (auto si : s) {
        int best = 1 << 20;
        for (auto v : mask_members(x))
            best = std::min(best, d[si][v]);
        a.push_back(best);
    }
    return a;
}

/// Nonempty X != Y with |X|, |Y| <= ell (resolving) or min(|X|,|Y|) <= ell (solid) and equal arrays.
inline auto brute_distinguishes(const Matrix & d, const std::vector<int> & s, int ell, bool solid) -> bool
{
    const int n = static_cast<int>(d.size());
    std::map<std::vector<int>, std::vector<std::uint32_t>> buckets;
    for (std::uint32_t x = 1; x < (1u << n); ++x) {
        const int size = __builtin_popcount(x);
        if (! solid && size > ell)
            continue;
        buckets[array_of(d, s, x)].push_back(x);
    }
    for (const auto & [arr, sets] : buckets) {
        if (sets.size() < 2)
            continue;
        if (! solid)
            return false;
        for (auto x : sets)
            if (__builtin_popcount(x) <= ell)
                return false;
    }
    return true;
}

inline auto brute_doubly(const Matrix & d, const std::vector<int> & s) -> bool
{
    const int n = static_cast<int>(d.size());
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) {
            bool ok = false;
            for (auto x : s)
                for (auto y : s)
                    if (d[v][x] - d[w][x] != d[v][y] - d[w][y])
                        ok = true;
            if (! ok)
                return false;
        }
    return true;
}

/// v is forced iff some U ⊆ V \ {v}, |U| <= budget, dominates N(v); U ranges over all of V.
inline auto brute_forced(const Graph & g, int budget) -> std::vector<int>
{
    const int n = g.size();
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        std::set<int> nv(g.neighbours(v).begin(), g.neighbours(v).end());
        bool forced = false;
        for (std::uint32_t u = 0; u < (1u << n) && ! forced; ++u) {
            if ((u >> v) & 1u || __builtin_popcount(u) > budget)
                continue;
            std::set<int> covered;
            for (auto x : mask_members(u)) {
                covered.insert(x);
                for (auto y : g.neighbours(x))
                    covered.insert(y);
            }
            forced = std::includes(covered.begin(), covered.end(), nv.begin(), nv.end());
        }
        if (forced)
            out.push_back(v);
    }
    return out;
}

/// Minimum over all shortest u-v paths of the number of distinct stars met, minus one.
inline auto brute_star_distance(const Graph & g, int n_stars, int u, int v) -> int
{
    auto d = floyd_warshall(g);
    int best = 1 << 20;
    std::vector<int> path{u};
    auto rec = [&](auto && self, int at) -> void {
        if (at == v) {
            std::set<int> stars;
            for (auto x : path)
                stars.insert(x % n_stars);
            best = std::min(best, static_cast<int>(stars.size()) - 1);
            return;
        }
        for (auto w : g.neighbours(at))
            if (d[u][w] == d[u][at] + 1 && d[w][v] == d[at][v] - 1) {
                path.push_back(w);
                self(self, w);
                path.pop_back();
            }
    };
    rec(rec, u);
    return best;
}

} // namespace lres::testing
