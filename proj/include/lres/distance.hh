#pragma once

#include "lres/graph.hh"

#include <cstdint>
#include <span>
#include <vector>

namespace lres {

using Distance = std::uint16_t;

/// All-pairs hop distances of a connected graph.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    auto size() const -> int { return n_; }
    auto operator()(Vertex u, Vertex v) const -> Distance { return data_[index(u, v)]; }
    auto row(Vertex u) const -> std::span<const Distance>
    {
        return std::span<const Distance>(data_).subspan(index(u, 0), static_cast<std::size_t>(n_));
    }
    auto diameter() const -> Distance { return diameter_; }

    friend auto all_pairs_distances(const Graph & g) -> DistanceMatrix;

private:
    auto index(Vertex u, Vertex v) const -> std::size_t
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    Distance diameter_ = 0;
    std::vector<Distance> data_;
};

/// One BFS per source. Throws DisconnectedGraph naming the first unreachable pair.
auto all_pairs_distances(const Graph & g) -> DistanceMatrix;

} // namespace lres
