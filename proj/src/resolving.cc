#include "lres/resolving.hh"

#include "lres/combinations.hh"
#include "lres/errors.hh"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <string_view>
#include <unordered_map>
#include <map>
#include <limits>
#include <bit>

namespace lres {

using Word = VertexBits::Word;

auto Mode::validate(int n) const -> void
{
    switch (kind) {
    case Kind::resolving:
        if (order < 1 || order > n)
            throw Error("{l}-resolving order must lie in 1.." + std::to_string(n) + ", got " + std::to_string(order));
        break;
    case Kind::solid:
        if (order < 1 || order > n - 1)
            throw Error("l-solid order must lie in 1.." + std::to_string(n - 1) + ", got " + std::to_string(order));
        break;
    case Kind::doubly:
        if (n < 2)
            throw Error("doubly resolving sets need at least two vertices");
        break;
    }
}

auto to_string(Kind kind) -> std::string
{
    switch (kind) {
    case Kind::resolving: return "resolving";
    case Kind::solid: return "solid";
    case Kind::doubly: return "doubly";
    }
    return "?";
}

auto to_string(const Mode & mode) -> std::string
{
    if (mode.kind == Kind::doubly)
        return "doubly";
    return to_string(mode.kind) + "(" + std::to_string(mode.order) + ")";
}

auto parse_kind(std::string_view text) -> Kind
{
    if (text == "resolving")
        return Kind::resolving;
    if (text == "solid")
        return Kind::solid;
    if (text == "doubly")
        return Kind::doubly;
    throw Error("unknown mode '" + std::string(text) + "' (expected resolving, solid or doubly)");
}

SeparationTable::SeparationTable(const DistanceMatrix & dm) :
    n_(dm.size()),
    words_(VertexBits::word_count(dm.size())),
    bits_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) * words_, 0)
{
    for (Vertex s = 0; s < n_; ++s) {
        auto row = dm.row(s);
        const auto word = static_cast<std::size_t>(s) / VertexBits::word_bits;
        const Word bit = Word{1} << (static_cast<unsigned>(s) % VertexBits::word_bits);
        for (Vertex x = 0; x < n_; ++x)
            for (Vertex y = 0; y < n_; ++y)
                if (row[static_cast<std::size_t>(x)] < row[static_cast<std::size_t>(y)])
                    bits_[(static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)) * words_ + word] |= bit;
    }
}

auto distance_array(const DistanceMatrix & dm, const VertexSet & s, std::span<const Vertex> x) -> DistanceArray
{
    if (s.empty() || x.empty())
        throw Error("distance arrays need nonempty S and X");
    s.check_range(dm.size());
    DistanceArray out;
    out.reserve(static_cast<std::size_t>(s.size()));
    for (auto si : s) {
        Distance best = dm(si, x[0]);
        for (auto xv : x) {
            if (xv < 0 || xv >= dm.size())
                throw Error("vertex " + std::to_string(xv) + " out of range");
            best = std::min(best, dm(si, xv));
        }
        out.push_back(best);
    }
    return out;
}

auto distance_array(const DistanceMatrix & dm, const VertexSet & s, const VertexSet & x) -> DistanceArray
{
    return distance_array(dm, s, x.span());
}

namespace {
    // Maps a combination over V \ {skip} (indices 0..n-2) back to vertices.
    auto lift(std::span<const int> c, Vertex skip, std::vector<Vertex> & out) -> void
    {
        out.resize(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            out[i] = c[i] < skip ? c[i] : c[i] + 1;
    }

    // Separation condition restricted to |Y| <= max_y; first failure in order
    // x ascending, then |Y| ascending, then colex.
    auto separation_check(const SeparationTable & table, const VertexSet & s, int max_y) -> CheckVerdict
    {
        const int n = table.size();
        const auto words = table.words_per_set();
        VertexBits sbits(s, n);
        auto sw = sbits.words();

        std::vector<Word> rows(static_cast<std::size_t>(n) * words);
        std::vector<Vertex> ys;
        for (Vertex x = 0; x < n; ++x) {
            if (sbits.test(x))
                continue; // s = x itself separates x from every Y
            for (Vertex y = 0; y < n; ++y) {
                auto c = table.closer(x, y);
                for (std::size_t w = 0; w < words; ++w)
                    rows[static_cast<std::size_t>(y) * words + w] = c[w] & sw[w];
            }
            for (int t = 1; t <= max_y && t <= n - 1; ++t) {
                std::optional<SeparationFailure> failure;
                for_each_combination(n - 1, t, [&](std::span<const int> c) {
                    lift(c, x, ys);
                    for (std::size_t w = 0; w < words; ++w) {
                        Word acc = ~Word{0};
                        for (auto y : ys)
                            acc &= rows[static_cast<std::size_t>(y) * words + w];
                        if (acc)
                            return true;
                    }
                    failure = SeparationFailure{x, VertexSet(ys)};
                    return false;
                });
                if (failure)
                    return CheckVerdict::fail(*failure);
            }
        }
        return CheckVerdict::pass();
    }

    // FNV-1a over the packed array bytes.
    auto hash_bytes(std::string_view bytes) -> std::uint64_t
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        return h;
    }

    class ArrayPacker {
    public:
        ArrayPacker(const DistanceMatrix & dm, const VertexSet & s) :
            dm_(dm), s_(s), wide_(dm.diameter() >= 255), width_(static_cast<std::size_t>(s.size()) * (wide_ ? 2 : 1))
        {
        }

        auto width() const -> std::size_t { return width_; }

        auto pack(std::span<const Vertex> x, unsigned char * out) const -> void
        {
            for (int i = 0; i < s_.size(); ++i) {
                auto row = dm_.row(s_[i]);
                Distance best = row[static_cast<std::size_t>(x[0])];
                for (auto v : x)
                    best = std::min(best, row[static_cast<std::size_t>(v)]);
                if (wide_) {
                    out[2 * i] = static_cast<unsigned char>(best >> 8);
                    out[2 * i + 1] = static_cast<unsigned char>(best & 0xff);
                }
                else
                    out[i] = static_cast<unsigned char>(best);
            }
        }

    private:
        const DistanceMatrix & dm_;
        const VertexSet & s_;
        bool wide_;
        std::size_t width_;
    };

    struct SizedIndex {
        int size;
        std::uint64_t rank;
    };

    auto resolve_index(std::uint64_t index, int first_size, int n) -> SizedIndex
    {
        for (int k = first_size;; ++k) {
            auto c = binomial(n, k);
            if (index < c)
                return {k, index};
            index -= c;
        }
    }

    auto unrank_set(SizedIndex si) -> VertexSet
    {
        std::vector<int> c(static_cast<std::size_t>(si.size));
        colex_unrank(si.rank, c);
        return VertexSet(std::move(c));
    }

    auto hash_table_check(const ArrayPacker & packer, int n, int first_size, int ell, std::uint64_t count) -> CheckVerdict
    {
        const auto width = packer.width();
        std::vector<unsigned char> arena(static_cast<std::size_t>(count) * width);
        std::unordered_map<std::string_view, std::uint64_t> first_seen;
        first_seen.reserve(static_cast<std::size_t>(count));

        std::uint64_t index = 0;
        std::optional<SetCollision> collision;
        for (int k = first_size; k <= ell && ! collision; ++k)
            for_each_combination(n, k, [&](std::span<const int> c) {
                auto * slot = arena.data() + index * width;
                packer.pack(c, slot);
                std::string_view key(reinterpret_cast<const char *>(slot), width);
                auto [it, inserted] = first_seen.emplace(key, index);
                if (! inserted) {
                    collision = SetCollision{unrank_set(resolve_index(it->second, first_size, n)), VertexSet(std::vector<int>(c.begin(), c.end()))};
                    return false;
                }
                ++index;
                return true;
            });
        if (collision)
            return CheckVerdict::fail(std::move(*collision));
        return CheckVerdict::pass();
    }

    // Two passes: hash every array with its enumeration index, sort, then
    // confirm equal-hash runs by recomputing the arrays exactly.
    auto sorted_check(const ArrayPacker & packer, int n, int first_size, int ell, std::uint64_t count) -> CheckVerdict
    {
        const auto width = packer.width();
        std::vector<std::pair<std::uint64_t, std::uint64_t>> keyed;
        keyed.reserve(static_cast<std::size_t>(count));
        std::vector<unsigned char> buf(width);
        std::uint64_t index = 0;
        for (int k = first_size; k <= ell; ++k)
            for_each_combination(n, k, [&](std::span<const int> c) {
                packer.pack(c, buf.data());
                keyed.emplace_back(hash_bytes({reinterpret_cast<const char *>(buf.data()), width}), index++);
                return true;
            });
        std::sort(keyed.begin(), keyed.end());

        std::optional<std::pair<std::uint64_t, std::uint64_t>> best; // (earlier, later)
        std::vector<unsigned char> run_arrays;
        for (std::size_t i = 0; i < keyed.size();) {
            std::size_t j = i + 1;
            while (j < keyed.size() && keyed[j].first == keyed[i].first)
                ++j;
            if (j - i > 1) {
                run_arrays.assign((j - i) * width, 0);
                for (std::size_t r = i; r < j; ++r) {
                    auto set = unrank_set(resolve_index(keyed[r].second, first_size, n));
                    packer.pack(set.span(), run_arrays.data() + (r - i) * width);
                }
                for (std::size_t r = i + 1; r < j; ++r)
                    for (std::size_t q = i; q < r; ++q)
                        if (0 == std::memcmp(run_arrays.data() + (r - i) * width, run_arrays.data() + (q - i) * width, width)) {
                            if (! best || keyed[r].second < best->second)
                                best = std::pair{keyed[q].second, keyed[r].second};
                            break;
                        }
            }
            i = j;
        }
        if (best)
            return CheckVerdict::fail(SetCollision{
                unrank_set(resolve_index(best->first, first_size, n)),
                unrank_set(resolve_index(best->second, first_size, n))});
        return CheckVerdict::pass();
    }

    auto validate_set(const DistanceMatrix & dm, const VertexSet & s) -> void
    {
        s.check_range(dm.size());
    }
}

auto is_l_resolving(const DistanceMatrix & dm, const VertexSet & s, int ell, const ResolvingOptions & opts) -> CheckVerdict
{
    const int n = dm.size();
    Mode::resolving(ell).validate(n);
    validate_set(dm, s);

    const int first_size = opts.lower_order_solid ? ell : 1;
    std::uint64_t count = 0;
    for (int k = first_size; k <= ell; ++k)
        count += binomial(n, k);

    ArrayPacker packer(dm, s);
    if (packer.width() == 0)
        return count > 1 ? CheckVerdict::fail(SetCollision{VertexSet{0}, n > 1 ? VertexSet{1} : VertexSet{0}}) : CheckVerdict::pass();

    constexpr std::size_t per_entry_overhead = 64;
    const auto needed = count * (packer.width() + per_entry_overhead);
    if (count <= std::uint64_t{1} << 40 && needed <= opts.memory_cap_bytes)
        return hash_table_check(packer, n, first_size, ell, count);
    return sorted_check(packer, n, first_size, ell, count);
}

auto is_l_solid(const DistanceMatrix & dm, const VertexSet & s, int ell) -> CheckVerdict
{
    Mode::solid(ell).validate(dm.size());
    validate_set(dm, s);
    return separation_check(SeparationTable(dm), s, ell);
}

auto is_l_solid(const SeparationTable & table, const VertexSet & s, int ell) -> CheckVerdict
{
    Mode::solid(ell).validate(table.size());
    s.check_range(table.size());
    return separation_check(table, s, ell);
}

auto is_l_solid_oracle(const DistanceMatrix & dm, const VertexSet & s, int ell, int cap) -> CheckVerdict
{
    const int n = dm.size();
    if (n > cap || n > 24)
        throw Error("solid oracle refuses graphs with more than " + std::to_string(std::min(cap, 24)) + " vertices");
    Mode::solid(ell).validate(n);
    validate_set(dm, s);

    // every nonempty subset, sizes ascending, colex within a size
    std::vector<std::uint32_t> subsets;
    std::vector<DistanceArray> arrays;
    for (int k = 1; k <= n; ++k)
        for_each_combination(n, k, [&](std::span<const int> c) {
            std::uint32_t mask = 0;
            for (auto v : c)
                mask |= 1u << v;
            subsets.push_back(mask);
            DistanceArray a;
            for (auto si : s) {
                Distance best = dm(si, c[0]);
                for (auto v : c)
                    best = std::min(best, dm(si, v));
                a.push_back(best);
            }
            arrays.push_back(std::move(a));
            return true;
        });

    auto to_set = [](std::uint32_t mask) {
        std::vector<Vertex> vs;
        for (int v = 0; mask; ++v, mask >>= 1)
            if (mask & 1u)
                vs.push_back(v);
        return VertexSet(std::move(vs));
    };

    std::map<DistanceArray, std::pair<std::size_t, std::size_t>> first_two;
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < arrays.size(); ++i) {
        auto [it, inserted] = first_two.try_emplace(arrays[i], i, none);
        if (! inserted && it->second.second == none)
            it->second.second = i;
    }
    for (std::size_t i = 0; i < arrays.size(); ++i) {
        if (std::popcount(subsets[i]) > ell)
            break;
        auto [a, b] = first_two.at(arrays[i]);
        if (b == none)
            continue;
        auto other = (a == i) ? b : a;
        return CheckVerdict::fail(SetCollision{to_set(subsets[i]), to_set(subsets[other])});
    }
    return CheckVerdict::pass();
}

auto necessary_resolving_condition(const DistanceMatrix & dm, const VertexSet & s, int ell) -> CheckVerdict
{
    if (ell < 2)
        throw Error("necessary resolving condition needs l >= 2");
    Mode::resolving(ell).validate(dm.size());
    validate_set(dm, s);
    return separation_check(SeparationTable(dm), s, ell - 1);
}

auto is_doubly_resolving(const DistanceMatrix & dm, const VertexSet & s) -> CheckVerdict
{
    const int n = dm.size();
    Mode::doubly().validate(n);
    validate_set(dm, s);
    if (s.size() < 2)
        throw Error("a doubly resolving set needs at least two vertices");
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w = v + 1; w < n; ++w) {
            const int base = int{dm(v, s[0])} - int{dm(w, s[0])};
            bool resolved = false;
            for (int i = 1; i < s.size() && ! resolved; ++i)
                resolved = (int{dm(v, s[i])} - int{dm(w, s[i])}) != base;
            if (! resolved)
                return CheckVerdict::fail(UnresolvedPair{v, w});
        }
    return CheckVerdict::pass();
}

auto check_mode(const DistanceMatrix & dm, const VertexSet & s, const Mode & mode) -> CheckVerdict
{
    switch (mode.kind) {
    case Kind::resolving: return is_l_resolving(dm, s, mode.order);
    case Kind::solid: return is_l_solid(dm, s, mode.order);
    case Kind::doubly: return is_doubly_resolving(dm, s);
    }
    throw Error("unknown mode");
}

auto witness_refutes(const DistanceMatrix & dm, const VertexSet & s, const Mode & mode, const Witness & w) -> bool
{
    if (const auto * c = std::get_if<SetCollision>(&w)) {
        if (c->first == c->second || c->first.empty() || c->second.empty() || s.empty())
            return false;
        if (mode.kind == Kind::resolving && (c->first.size() > mode.order || c->second.size() > mode.order))
            return false;
        if (mode.kind == Kind::solid && c->first.size() > mode.order && c->second.size() > mode.order)
            return false;
        if (mode.kind == Kind::doubly)
            return false;
        return distance_array(dm, s, c->first) == distance_array(dm, s, c->second);
    }
    if (const auto * f = std::get_if<SeparationFailure>(&w)) {
        if (f->ys.empty() || f->ys.contains(f->x) || mode.kind == Kind::doubly)
            return false;
        const int limit = mode.kind == Kind::solid ? mode.order : mode.order - 1;
        if (f->ys.size() > limit)
            return false;
        for (auto si : s) {
            Distance dy = dm(si, f->ys[0]);
            for (auto y : f->ys)
                dy = std::min(dy, dm(si, y));
            if (dm(si, f->x) < dy)
                return false;
        }
        return true;
    }
    const auto & p = std::get<UnresolvedPair>(w);
    if (mode.kind != Kind::doubly || p.v == p.w || s.size() < 2)
        return false;
    const int base = int{dm(p.v, s[0])} - int{dm(p.w, s[0])};
    for (auto si : s)
        if (int{dm(p.v, si)} - int{dm(p.w, si)} != base)
            return false;
    return true;
}

namespace {
    auto covers_within(const Graph & g, Vertex v, VertexBits uncovered, int budget) -> bool
    {
        if (uncovered.none())
            return true;
        if (budget == 0)
            return false;
        const auto w = uncovered.first();
        // some u in U must dominate w, i.e. u in N[w]
        auto try_u = [&](Vertex u) {
            if (u == v)
                return false;
            auto rest = uncovered;
            rest.reset(u);
            for (auto x : g.neighbours(u))
                rest.reset(x);
            return covers_within(g, v, std::move(rest), budget - 1);
        };
        if (try_u(w))
            return true;
        for (auto u : g.neighbours(w))
            if (try_u(u))
                return true;
        return false;
    }
}

auto forced_vertices(const Graph & g, const DistanceMatrix & dm, int ell, ForcedKind kind) -> VertexSet
{
    g.require_connected();
    if (dm.size() != g.size())
        throw Error("distance matrix does not belong to this graph");
    if (ell < 1)
        throw Error("order must be at least 1");
    const int budget = kind == ForcedKind::solid ? ell : ell - 1;

    std::vector<Vertex> forced;
    for (Vertex v = 0; v < g.size(); ++v) {
        VertexBits open(g.size());
        for (auto u : g.neighbours(v))
            open.set(u);
        if (covers_within(g, v, open, budget))
            forced.push_back(v);
    }
    return VertexSet(std::move(forced));
}

auto forced_vertices_oracle(const Graph & g, const DistanceMatrix & dm, int ell, ForcedKind kind, int cap) -> VertexSet
{
    g.require_connected();
    if (g.size() > cap)
        throw Error("forced-vertex oracle refuses graphs with more than " + std::to_string(cap) + " vertices");
    std::vector<Vertex> forced;
    const auto everything = VertexSet::all(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        auto rest = everything.without(v);
        const bool passes = kind == ForcedKind::solid ? is_l_solid(dm, rest, ell).holds : is_l_resolving(dm, rest, ell).holds;
        if (! passes)
            forced.push_back(v);
    }
    return VertexSet(std::move(forced));
}

} // namespace lres
