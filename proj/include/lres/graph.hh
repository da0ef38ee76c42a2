#pragma once

#include "lres/vertex_set.hh"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lres {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction rejects self-loops, duplicate edges and out-of-range
/// endpoints. Disconnected graphs can be built (connected() reports it), but
/// every analysis entry point calls require_connected() and refuses them.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::span<const Edge> edges);

    auto size() const -> int { return n_; }
    auto edge_count() const -> int { return static_cast<int>(targets_.size() / 2); }
    auto neighbours(Vertex v) const -> std::span<const Vertex>;
    auto degree(Vertex v) const -> int { return static_cast<int>(neighbours(v).size()); }
    auto adjacent(Vertex u, Vertex v) const -> bool;

    /// Canonical edge list: u < v, sorted lexicographically.
    auto edges() const -> std::vector<Edge>;

    auto connected() const -> bool { return connected_; }
    auto require_connected() const -> void;

    /// Display label of v; falls back to the decimal index.
    auto label(Vertex v) const -> std::string;
    auto has_labels() const -> bool { return ! labels_.empty(); }
    auto find_label(std::string_view label) const -> std::optional<Vertex>;
    auto set_labels(std::vector<std::string> labels) -> void;

    /// Generator that produced the graph, e.g. "flower-snark 5"; empty when unknown.
    auto family() const -> const std::string & { return family_; }
    auto set_family(std::string family) -> void { family_ = std::move(family); }

    /// Same vertex count and edge set; labels are ignored.
    auto same_structure(const Graph & other) const -> bool;

private:
    int n_ = 0;
    std::vector<int> offsets_{0};
    std::vector<Vertex> targets_;
    std::vector<std::string> labels_;
    std::string family_;
    bool connected_ = true;
};

auto build_graph(int n, std::span<const Edge> edges) -> Graph;

} // namespace lres
