#include "lres/combinations.hh"

#include <limits>

namespace lres {

namespace {
    constexpr auto saturated = std::numeric_limits<std::uint64_t>::max();
}

auto binomial(int n, int k) -> std::uint64_t
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > saturated)
            return saturated;
    }
    return static_cast<std::uint64_t>(r);
}

auto subsets_up_to(int n, int k) -> std::uint64_t
{
    std::uint64_t total = 0;
    for (int i = 1; i <= k && i <= n; ++i) {
        auto b = binomial(n, i);
        if (b > saturated - total)
            return saturated;
        total += b;
    }
    return total;
}

auto colex_rank(std::span<const int> combination) -> std::uint64_t
{
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < combination.size(); ++i)
        r += binomial(combination[i], static_cast<int>(i) + 1);
    return r;
}

auto colex_unrank(std::uint64_t rank, std::span<int> out) -> void
{
    for (int i = static_cast<int>(out.size()); i >= 1; --i) {
        // largest c with C(c, i) <= rank
        int c = i - 1;
        while (binomial(c + 1, i) <= rank)
            ++c;
        out[static_cast<std::size_t>(i - 1)] = c;
        rank -= binomial(c, i);
    }
}

} // namespace lres
