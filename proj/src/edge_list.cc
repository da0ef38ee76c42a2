#include "lres/edge_list.hh"

#include "lres/errors.hh"
#include "lres/generators.hh"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lres {

namespace {
    auto trim(std::string_view s) -> std::string_view
    {
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string_view::npos)
            return {};
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    auto parse_ints(std::string_view line, int lineno) -> std::vector<long long>
    {
        std::vector<long long> out;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
                ++pos;
            if (pos == line.size())
                break;
            long long v = 0;
            auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
            if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
                throw ParseError(lineno, "expected integers, got '" + std::string(line) + "'");
            pos = static_cast<std::size_t>(ptr - line.data());
            out.push_back(v);
        }
        return out;
    }

    constexpr std::string_view family_tag = "family:";
}

auto parse_edge_list(std::string_view text) -> Graph
{
    std::optional<int> n;
    std::vector<Edge> edges;
    std::string family;
    int lineno = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        auto line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++lineno;

        if (line.empty())
            continue;
        if (line.front() == '#') {
            auto body = trim(line.substr(1));
            if (body.starts_with(family_tag))
                family = std::string(trim(body.substr(family_tag.size())));
            continue;
        }

        auto vals = parse_ints(line, lineno);
        if (! n) {
            if (vals.size() != 1 || vals[0] < 0 || vals[0] > 1'000'000)
                throw ParseError(lineno, "expected vertex count");
            n = static_cast<int>(vals[0]);
            continue;
        }
        if (vals.size() != 2)
            throw ParseError(lineno, "expected 'u v'");
        if (vals[0] < 0 || vals[1] < 0 || vals[0] >= *n || vals[1] >= *n)
            throw ParseError(lineno, "vertex index out of range");
        if (vals[0] >= vals[1])
            throw ParseError(lineno, "edge must satisfy u < v");
        edges.emplace_back(static_cast<int>(vals[0]), static_cast<int>(vals[1]));
    }
    if (! n)
        throw ParseError(lineno, "missing vertex count");

    Graph g = [&] {
        try {
            return Graph(*n, edges);
        }
        catch (const ParseError &) {
            throw;
        }
        catch (const Error & e) {
            throw ParseError(lineno, e.what());
        }
    }();

    if (! family.empty()) {
        try {
            auto generated = generate_family(parse_family(family));
            if (generated.same_structure(g))
                return generated;
        }
        catch (const Error &) {
            // unknown or malformed family comment: keep the plain graph
        }
    }
    return g;
}

auto write_edge_list(const Graph & g) -> std::string
{
    std::ostringstream os;
    if (! g.family().empty())
        os << "# " << family_tag << ' ' << g.family() << '\n';
    os << g.size() << '\n';
    for (auto [u, v] : g.edges())
        os << u << ' ' << v << '\n';
    return os.str();
}

auto read_edge_list_file(const std::filesystem::path & path) -> Graph
{
    std::ifstream in(path);
    if (! in)
        throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str());
}

auto write_edge_list_file(const Graph & g, const std::filesystem::path & path) -> void
{
    std::ofstream out(path);
    if (! out)
        throw Error("cannot write " + path.string());
    out << write_edge_list(g);
}

} // namespace lres
