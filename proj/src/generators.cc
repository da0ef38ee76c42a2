#include "lres/generators.hh"

#include "lres/distance.hh"
#include "lres/errors.hh"

#include <algorithm>
#include <sstream>

namespace lres {

namespace {
    auto require(bool ok, const std::string & what) -> void
    {
        if (! ok)
            throw Error(what);
    }

    auto with_family(Graph g, const FamilySpec & spec) -> Graph
    {
        g.set_family(to_string(spec));
        return g;
    }
}

auto path_graph(int n) -> Graph
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return with_family(Graph(n, edges), {"path", {n}});
}

auto cycle_graph(int n) -> Graph
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return with_family(Graph(n, edges), {"cycle", {n}});
}

auto complete_graph(int n) -> Graph
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return with_family(Graph(n, edges), {"complete", {n}});
}

auto star_graph(int m) -> Graph
{
    require(m >= 1, "star needs m >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i)
        edges.emplace_back(0, i);
    return with_family(Graph(m + 1, edges), {"star", {m}});
}

auto tree_from_parents(std::span<const int> parent) -> Graph
{
    require(! parent.empty() && parent[0] == -1, "tree parent array must start with -1");
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < parent.size(); ++v) {
        require(parent[v] >= 0 && parent[v] < static_cast<int>(v), "tree parent of " + std::to_string(v) + " must precede it");
        edges.emplace_back(parent[v], static_cast<int>(v));
    }
    return with_family(Graph(static_cast<int>(parent.size()), edges), {"tree", {parent.begin(), parent.end()}});
}

auto product_coord(int h_size, Vertex flat) -> ProductCoord
{
    return {flat / h_size, flat % h_size, flat};
}

auto product_flat(int h_size, Vertex g, Vertex h) -> Vertex
{
    return g * h_size + h;
}

auto cartesian_product(const Graph & g, const Graph & h) -> Graph
{
    require(g.size() >= 1 && h.size() >= 1, "product factors must be nonempty");
    const int hs = h.size();
    std::vector<Edge> edges;
    for (Vertex a = 0; a < g.size(); ++a)
        for (Vertex v = 0; v < hs; ++v) {
            for (auto u : h.neighbours(v))
                if (v < u)
                    edges.emplace_back(product_flat(hs, a, v), product_flat(hs, a, u));
            for (auto b : g.neighbours(a))
                if (a < b)
                    edges.emplace_back(product_flat(hs, a, v), product_flat(hs, b, v));
        }
    Graph out(g.size() * hs, edges);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(out.size()));
    for (Vertex f = 0; f < out.size(); ++f) {
        auto c = product_coord(hs, f);
        labels.push_back("(" + std::to_string(c.g) + "," + std::to_string(c.h) + ")");
    }
    out.set_labels(std::move(labels));
    return out;
}

auto flower_snark(int n) -> Graph
{
    require(n >= 5 && n % 2 == 1, "flower snark needs odd n >= 5, got " + std::to_string(n));
    auto a = [n](int i) { return (i - 1 + n) % n; };
    auto b = [n](int i) { return n + (i - 1 + n) % n; };
    auto c = [n](int i) { return 2 * n + (i - 1 + n) % n; };
    auto d = [n](int i) { return 3 * n + (i - 1 + n) % n; };

    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(b(i), a(i));
        edges.emplace_back(b(i), c(i));
        edges.emplace_back(b(i), d(i));
        edges.emplace_back(a(i), a(i + 1));
    }
    // the single 2n-cycle c_1 .. c_n d_1 .. d_n c_1
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(c(i), c(i + 1));
        edges.emplace_back(d(i), d(i + 1));
    }
    edges.emplace_back(c(n), d(1));
    edges.emplace_back(d(n), c(1));

    Graph g(4 * n, edges);
    std::vector<std::string> labels;
    for (char role : {'a', 'b', 'c', 'd'})
        for (int i = 1; i <= n; ++i)
            labels.push_back(std::string(1, role) + std::to_string(i));
    g.set_labels(std::move(labels));
    return with_family(std::move(g), {"flower-snark", {n}});
}

auto rook_graph(int m, int n) -> Graph
{
    require(m >= 2 && n >= 2, "rook's graph needs m, n >= 2");
    auto g = cartesian_product(complete_graph(m), complete_graph(n));
    return with_family(std::move(g), {"rook", {m, n}});
}

auto graph_h() -> Graph
{
    // v1..v9 -> 0..8
    const std::vector<Edge> edges{
        {0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {1, 4},
        {3, 6}, {4, 5}, {5, 6}, {4, 7}, {6, 8}, {7, 8}};
    Graph g(9, edges);
    std::vector<std::string> labels;
    for (int i = 1; i <= 9; ++i)
        labels.push_back("v" + std::to_string(i));
    g.set_labels(std::move(labels));
    g.set_family("H");

    // Reference distance arrays (1-based vertex names); the edge list must reproduce all of them.
    struct Check {
        std::vector<int> s, x, expected;
    };
    const std::vector<Check> checks{
        {{2, 3, 7}, {6}, {2, 3, 1}},
        {{2, 3, 7}, {8, 9}, {2, 3, 1}},
        {{1, 2, 3, 4, 8, 9}, {6}, {3, 2, 3, 2, 2, 2}},
        {{1, 2, 3, 4, 8, 9}, {8, 9}, {3, 2, 3, 2, 0, 0}},
        {{1, 2, 3, 7, 8}, {6}, {3, 2, 3, 1, 2}},
        {{1, 2, 3, 7, 8}, {8, 9}, {3, 2, 3, 1, 0}},
        {{1, 2, 3, 7, 8}, {6, 8}, {3, 2, 3, 1, 0}},
        {{1, 2, 3, 4, 8, 9}, {5, 7}, {2, 1, 2, 1, 1, 1}},
        {{1, 2, 3, 4, 8, 9}, {5, 6, 7}, {2, 1, 2, 1, 1, 1}},
        {{1, 2, 3, 4, 6, 8, 9}, {5, 7}, {2, 1, 2, 1, 1, 1, 1}},
        {{1, 2, 3, 4, 6, 8, 9}, {5, 6, 7}, {2, 1, 2, 1, 0, 1, 1}},
    };
    auto dm = all_pairs_distances(g);
    for (const auto & chk : checks)
        for (std::size_t i = 0; i < chk.s.size(); ++i) {
            int best = dm.size();
            for (int x : chk.x)
                best = std::min<int>(best, dm(chk.s[i] - 1, x - 1));
            if (best != chk.expected[i])
                throw Error("graph H fixture does not reproduce its published distance arrays");
        }
    return g;
}

auto generate_family(const FamilySpec & spec) -> Graph
{
    const auto & p = spec.params;
    auto arity = [&](std::size_t k) {
        require(p.size() == k, "family '" + spec.name + "' takes " + std::to_string(k) + " parameter(s)");
    };
    if (spec.name == "path") {
        arity(1);
        return path_graph(p[0]);
    }
    if (spec.name == "cycle") {
        arity(1);
        return cycle_graph(p[0]);
    }
    if (spec.name == "complete") {
        arity(1);
        return complete_graph(p[0]);
    }
    if (spec.name == "star") {
        arity(1);
        return star_graph(p[0]);
    }
    if (spec.name == "tree")
        return tree_from_parents(p);
    if (spec.name == "flower-snark") {
        arity(1);
        return flower_snark(p[0]);
    }
    if (spec.name == "rook") {
        arity(2);
        return rook_graph(p[0], p[1]);
    }
    if (spec.name == "H") {
        arity(0);
        return graph_h();
    }
    throw Error("unknown graph family '" + spec.name + "'");
}

auto parse_family(std::string_view text) -> FamilySpec
{
    std::istringstream is{std::string(text)};
    FamilySpec spec;
    if (! (is >> spec.name))
        throw Error("empty family specification");
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            spec.params.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                throw Error("");
        }
        catch (const std::exception &) {
            throw Error("bad family parameter '" + tok + "'");
        }
    }
    return spec;
}

auto to_string(const FamilySpec & spec) -> std::string
{
    std::string out = spec.name;
    for (auto p : spec.params)
        out += " " + std::to_string(p);
    return out;
}

} // namespace lres
