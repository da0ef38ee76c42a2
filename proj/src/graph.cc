#include "lres/graph.hh"

#include "lres/errors.hh"

#include <algorithm>
#include <numeric>

namespace lres {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n)
{
    if (n < 0)
        throw Error("vertex count must be nonnegative");

    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for " + std::to_string(n) + " vertices");
        if (u == v)
            throw Error("self-loop at vertex " + std::to_string(u));
        canon.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(canon.begin(), canon.end());
    if (auto dup = std::adjacent_find(canon.begin(), canon.end()); dup != canon.end())
        throw Error("duplicate edge (" + std::to_string(dup->first) + ", " + std::to_string(dup->second) + ")");

    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : canon) {
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    std::partial_sum(degree.begin(), degree.end(), offsets_.begin() + 1);
    targets_.resize(canon.size() * 2);
    auto fill = offsets_;
    for (auto [u, v] : canon) {
        targets_[static_cast<std::size_t>(fill[static_cast<std::size_t>(u)]++)] = v;
        targets_[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = u;
    }
    for (int v = 0; v < n; ++v)
        std::sort(targets_.begin() + offsets_[static_cast<std::size_t>(v)], targets_.begin() + offsets_[static_cast<std::size_t>(v) + 1]);

    // connectivity by DFS from vertex 0
    if (n > 0) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : neighbours(v))
                if (! seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        connected_ = (reached == n);
    }
}

auto Graph::neighbours(Vertex v) const -> std::span<const Vertex>
{
    auto b = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v)]);
    auto e = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1]);
    return std::span<const Vertex>(targets_).subspan(b, e - b);
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    auto nu = neighbours(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    out.reserve(targets_.size() / 2);
    for (Vertex u = 0; u < n_; ++u)
        for (auto v : neighbours(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

auto Graph::require_connected() const -> void
{
    if (connected_)
        return;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    while (! stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : neighbours(v))
            if (! seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    auto it = std::find(seen.begin(), seen.end(), 0);
    throw DisconnectedGraph(0, static_cast<int>(it - seen.begin()));
}

auto Graph::label(Vertex v) const -> std::string
{
    if (labels_.empty())
        return std::to_string(v);
    return labels_[static_cast<std::size_t>(v)];
}

auto Graph::find_label(std::string_view label) const -> std::optional<Vertex>
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return static_cast<Vertex>(i);
    return std::nullopt;
}

auto Graph::set_labels(std::vector<std::string> labels) -> void
{
    if (! labels.empty() && static_cast<int>(labels.size()) != n_)
        throw Error("label count does not match vertex count");
    labels_ = std::move(labels);
}

auto Graph::same_structure(const Graph & other) const -> bool
{
    return n_ == other.n_ && offsets_ == other.offsets_ && targets_ == other.targets_;
}

auto build_graph(int n, std::span<const Edge> edges) -> Graph
{
    return Graph(n, edges);
}

} // namespace lres
