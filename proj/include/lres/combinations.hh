#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace lres {

/// C(n, k), saturating at UINT64_MAX.
auto binomial(int n, int k) -> std::uint64_t;

/// Sum of C(n, i) for i = 1..k, saturating.
auto subsets_up_to(int n, int k) -> std::uint64_t;

/// Rank of a strictly increasing k-combination in colexicographic order.
auto colex_rank(std::span<const int> combination) -> std::uint64_t;

/// Inverse of colex_rank; writes k = out.size() strictly increasing indices.
auto colex_unrank(std::uint64_t rank, std::span<int> out) -> void;

/// Advances a strictly increasing combination over {0..n-1} to its colex successor.
/// Returns false (leaving the input unspecified) when it was the last one.
inline auto next_colex(std::span<int> c, int n) -> bool
{
    const auto k = c.size();
    for (std::size_t j = 0; j < k; ++j) {
        const int limit = (j + 1 < k) ? c[j + 1] : n;
        if (c[j] + 1 < limit) {
            ++c[j];
            for (std::size_t i = 0; i < j; ++i)
                c[i] = static_cast<int>(i);
            return true;
        }
    }
    return false;
}

/// Calls fn(span<const int>) for every k-subset of {0..n-1} in colex order.
/// fn returns false to stop early; the function returns false iff stopped.
template <typename Fn>
auto for_each_combination(int n, int k, Fn && fn) -> bool
{
    if (k < 0 || k > n)
        return true;
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    do {
        if (! fn(std::span<const int>(c)))
            return false;
    } while (next_colex(c, n));
    return true;
}

/// Colex order by size, then within a size: sizes 1..max_size.
template <typename Fn>
auto for_each_subset_up_to(int n, int max_size, Fn && fn) -> bool
{
    for (int k = 1; k <= max_size && k <= n; ++k)
        if (! for_each_combination(n, k, fn))
            return false;
    return true;
}

} // namespace lres
