#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lres {

using Vertex = int;

/// Strictly increasing list of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs);

    /// Sorts the input; throws lres::Error on duplicates or negative indices.
    explicit VertexSet(std::vector<Vertex> vs);

    static auto all(int n) -> VertexSet;

    auto size() const -> int { return static_cast<int>(members_.size()); }
    auto empty() const -> bool { return members_.empty(); }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    auto operator[](int i) const -> Vertex { return members_[static_cast<std::size_t>(i)]; }
    auto span() const -> std::span<const Vertex> { return members_; }
    auto vector() const -> const std::vector<Vertex> & { return members_; }

    auto contains(Vertex v) const -> bool;
    auto is_subset_of(const VertexSet & other) const -> bool;

    /// Throws lres::Error unless every member lies in 0..n-1.
    auto check_range(int n) const -> void;

    auto with(Vertex v) const -> VertexSet;
    auto without(Vertex v) const -> VertexSet;

    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;
    friend auto operator<=>(const VertexSet &, const VertexSet &) = default;

private:
    std::vector<Vertex> members_;
};

auto set_union(const VertexSet & a, const VertexSet & b) -> VertexSet;
auto set_difference(const VertexSet & a, const VertexSet & b) -> VertexSet;

auto to_string(const VertexSet & s) -> std::string;

} // namespace lres
