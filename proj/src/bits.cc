#include "lres/bits.hh"

namespace lres {

VertexBits::VertexBits(const VertexSet & s, int n) : VertexBits(n)
{
    s.check_range(n);
    for (auto v : s)
        set(v);
}

auto VertexBits::count() const -> int
{
    int c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

auto VertexBits::any() const -> bool
{
    for (auto w : words_)
        if (w)
            return true;
    return false;
}

auto VertexBits::first() const -> Vertex
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i])
            return static_cast<Vertex>(i * word_bits + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return -1;
}

auto VertexBits::intersects(const VertexBits & other) const -> bool
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

auto VertexBits::is_subset_of(const VertexBits & other) const -> bool
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

auto VertexBits::operator|=(const VertexBits & other) -> VertexBits &
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

auto VertexBits::operator&=(const VertexBits & other) -> VertexBits &
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

auto VertexBits::to_set() const -> VertexSet
{
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < words_.size(); ++i)
        for (auto w = words_[i]; w; w &= w - 1)
            vs.push_back(static_cast<Vertex>(i * word_bits + static_cast<std::size_t>(std::countr_zero(w))));
    return VertexSet(std::move(vs));
}

} // namespace lres
