#include "lres/distance.hh"

#include "lres/errors.hh"

#include <algorithm>
#include <limits>

namespace lres {

auto all_pairs_distances(const Graph & g) -> DistanceMatrix
{
    constexpr auto unreached = std::numeric_limits<Distance>::max();

    DistanceMatrix dm;
    dm.n_ = g.size();
    dm.data_.assign(static_cast<std::size_t>(dm.n_) * static_cast<std::size_t>(dm.n_), unreached);

    std::vector<Vertex> queue(static_cast<std::size_t>(dm.n_));
    for (Vertex src = 0; src < dm.n_; ++src) {
        auto * row = dm.data_.data() + dm.index(src, 0);
        row[src] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = src;
        while (head < tail) {
            auto v = queue[head++];
            for (auto w : g.neighbours(v))
                if (row[w] == unreached) {
                    row[w] = static_cast<Distance>(row[v] + 1);
                    queue[tail++] = w;
                }
        }
        if (tail != static_cast<std::size_t>(dm.n_)) {
            auto miss = std::find(row, row + dm.n_, unreached);
            throw DisconnectedGraph(src, static_cast<int>(miss - row));
        }
        dm.diameter_ = std::max(dm.diameter_, *std::max_element(row, row + dm.n_));
    }
    return dm;
}

} // namespace lres
