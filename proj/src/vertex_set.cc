#include "lres/vertex_set.hh"

#include "lres/errors.hh"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <sstream>

namespace lres {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs))
{
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw Error("vertex set contains a duplicate");
    if (! members_.empty() && members_.front() < 0)
        throw Error("vertex set contains a negative index");
}

auto VertexSet::all(int n) -> VertexSet
{
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    std::iota(vs.begin(), vs.end(), 0);
    return VertexSet(std::move(vs));
}

auto VertexSet::contains(Vertex v) const -> bool
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
{
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

auto VertexSet::check_range(int n) const -> void
{
    if (! members_.empty() && members_.back() >= n)
        throw Error("vertex " + std::to_string(members_.back()) + " out of range for a graph on " + std::to_string(n) + " vertices");
}

auto VertexSet::with(Vertex v) const -> VertexSet
{
    if (contains(v))
        return *this;
    auto vs = members_;
    vs.insert(std::upper_bound(vs.begin(), vs.end(), v), v);
    return VertexSet(std::move(vs));
}

auto VertexSet::without(Vertex v) const -> VertexSet
{
    auto vs = members_;
    vs.erase(std::remove(vs.begin(), vs.end(), v), vs.end());
    return VertexSet(std::move(vs));
}

auto set_union(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

auto set_difference(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

auto to_string(const VertexSet & s) -> std::string
{
    std::ostringstream os;
    os << '{';
    for (int i = 0; i < s.size(); ++i)
        os << (i ? ", " : "") << s[i];
    os << '}';
    return os.str();
}

} // namespace lres
