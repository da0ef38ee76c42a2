#pragma once

#include "lres/vertex_set.hh"

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace lres {

/// Fixed-width bitset over the vertices of one graph.
class VertexBits {
public:
    using Word = std::uint64_t;
    static constexpr int word_bits = 64;

    VertexBits() = default;
    explicit VertexBits(int n) : words_(word_count(n), 0), n_(n) {}
    VertexBits(const VertexSet & s, int n);

    static constexpr auto word_count(int n) -> std::size_t { return static_cast<std::size_t>((n + word_bits - 1) / word_bits); }

    auto universe() const -> int { return n_; }

    auto set(Vertex v) -> void { words_[idx(v)] |= mask(v); }
    auto reset(Vertex v) -> void { words_[idx(v)] &= ~mask(v); }
    auto test(Vertex v) const -> bool { return (words_[idx(v)] & mask(v)) != 0; }

    auto count() const -> int;
    auto any() const -> bool;
    auto none() const -> bool { return ! any(); }
    auto first() const -> Vertex;
    auto intersects(const VertexBits & other) const -> bool;
    auto is_subset_of(const VertexBits & other) const -> bool;

    auto operator|=(const VertexBits & other) -> VertexBits &;
    auto operator&=(const VertexBits & other) -> VertexBits &;

    auto words() const -> std::span<const Word> { return words_; }
    auto words() -> std::span<Word> { return words_; }

    auto to_set() const -> VertexSet;

    friend auto operator==(const VertexBits &, const VertexBits &) -> bool = default;

private:
    static auto idx(Vertex v) -> std::size_t { return static_cast<std::size_t>(v) / word_bits; }
    static auto mask(Vertex v) -> Word { return Word{1} << (static_cast<unsigned>(v) % word_bits); }

    std::vector<Word> words_;
    int n_ = 0;
};

} // namespace lres
