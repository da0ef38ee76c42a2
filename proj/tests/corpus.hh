#pragma once

#include "lres/generators.hh"
#include "lres/graph.hh"

#include <algorithm>
#include <random>
#include <vector>

namespace lres::testing {

/// Random spanning tree plus extra edges with probability p.
inline auto random_connected_graph(std::mt19937_64 & rng, int n, double p) -> Graph
{
    std::vector<Edge> edges;
    std::vector<char> used(static_cast<std::size_t>(n * n), 0);
    auto add = [&](int u, int v) {
        if (u > v)
            std::swap(u, v);
        if (u == v || used[static_cast<std::size_t>(u * n + v)])
            return;
        used[static_cast<std::size_t>(u * n + v)] = 1;
        edges.emplace_back(u, v);
    };
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        add(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(pick(rng))]);
    }
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                add(u, v);
    return build_graph(n, edges);
}

/// Deterministic corpus of connected graphs on 2..max_n vertices.
inline auto random_corpus(std::uint64_t seed, int count, int max_n) -> std::vector<Graph>
{
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    std::uniform_int_distribution<int> size(2, max_n);
    std::uniform_real_distribution<double> density(0.0, 0.6);
    for (int i = 0; i < count; ++i)
        out.push_back(random_connected_graph(rng, size(rng), density(rng)));
    return out;
}

} // namespace lres::testing
