#include "cli_support.hh"

#include "lres/edge_list.hh"
#include "lres/errors.hh"
#include "lres/generators.hh"

#include <charconv>
#include <cstdio>
#include <filesystem>

namespace lres::cli {

namespace {
    auto to_int(std::string_view s) -> std::optional<int>
    {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            return std::nullopt;
        return v;
    }

    auto builtin(std::string_view spec) -> std::optional<FamilySpec>
    {
        if (spec == "H" || spec == "H-fixture")
            return FamilySpec{"H", {}};
        if (auto colon = spec.find(':'); colon != std::string_view::npos) {
            auto name = spec.substr(0, colon);
            auto arg = spec.substr(colon + 1);
            if (name == "rook") {
                auto x = arg.find('x');
                if (x == std::string_view::npos)
                    throw Error("rook graphs are written rook:<m>x<n>");
                auto m = to_int(arg.substr(0, x)), n = to_int(arg.substr(x + 1));
                if (! m || ! n)
                    throw Error("bad rook dimensions '" + std::string(arg) + "'");
                return FamilySpec{"rook", {*m, *n}};
            }
            auto v = to_int(arg);
            if (! v)
                throw Error("bad parameter in '" + std::string(spec) + "'");
            return FamilySpec{std::string(name), {*v}};
        }
        if (spec.starts_with("K1,"))
            if (auto v = to_int(spec.substr(3)))
                return FamilySpec{"star", {*v}};
        const std::pair<char, const char *> prefixes[] = {{'J', "flower-snark"}, {'K', "complete"}, {'P', "path"}, {'C', "cycle"}};
        for (auto [p, name] : prefixes)
            if (spec.size() > 1 && spec[0] == p)
                if (auto v = to_int(spec.substr(1)))
                    return FamilySpec{name, {*v}};
        return std::nullopt;
    }
}

auto resolve_graph(std::string_view spec) -> Graph
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(std::filesystem::path(spec), ec))
        return read_edge_list_file(std::filesystem::path(spec));
    if (auto fam = builtin(spec))
        return generate_family(*fam);
    if (spec.find(' ') != std::string_view::npos)
        return generate_family(parse_family(spec));
    throw Error("'" + std::string(spec) + "' is neither a file nor a known graph");
}

auto parse_vertex_set(const Graph & g, std::string_view text) -> VertexSet
{
    std::vector<Vertex> vs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        // split on commas outside parentheses so rook labels "(r,c)" stay whole
        auto comma = pos;
        for (int depth = 0; comma < text.size(); ++comma) {
            if (text[comma] == '(')
                ++depth;
            else if (text[comma] == ')')
                --depth;
            else if (text[comma] == ',' && depth == 0)
                break;
        }
        auto tok = text.substr(pos, comma - pos);
        while (! tok.empty() && (tok.front() == ' ' || tok.front() == '{'))
            tok.remove_prefix(1);
        while (! tok.empty() && (tok.back() == ' ' || tok.back() == '}'))
            tok.remove_suffix(1);
        pos = comma + 1;
        if (tok.empty()) {
            if (comma == text.size())
                break;
            throw Error("empty element in vertex set");
        }
        if (auto label = g.find_label(tok))
            vs.push_back(*label);
        else if (auto v = to_int(tok)) {
            if (*v < 0 || *v >= g.size())
                throw Error("vertex " + std::string(tok) + " out of range");
            vs.push_back(*v);
        }
        else
            throw Error("unknown vertex '" + std::string(tok) + "'");
    }
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw Error("vertex listed twice in set");
    return VertexSet(std::move(vs));
}

auto digest_text(std::string_view text) -> std::string
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

auto digest(const Graph & g) -> std::string
{
    return digest_text(write_edge_list(g));
}

auto set_json(const Graph & g, const VertexSet & s) -> nlohmann::json
{
    nlohmann::json idx = nlohmann::json::array(), labels = nlohmann::json::array();
    for (auto v : s) {
        idx.push_back(v);
        labels.push_back(g.label(v));
    }
    return {{"indices", idx}, {"labels", labels}};
}

auto set_text(const Graph & g, const VertexSet & s) -> std::string
{
    std::string out = "{";
    for (int i = 0; i < s.size(); ++i)
        out += (i ? ", " : "") + g.label(s[i]);
    return out + "}";
}

auto witness_json(const Graph & g, const Witness & w) -> nlohmann::json
{
    if (const auto * c = std::get_if<SetCollision>(&w))
        return {{"kind", "set-collision"}, {"first", set_json(g, c->first)}, {"second", set_json(g, c->second)}};
    if (const auto * f = std::get_if<SeparationFailure>(&w))
        return {{"kind", "separation-failure"}, {"x", set_json(g, VertexSet{f->x})}, {"ys", set_json(g, f->ys)}};
    const auto & p = std::get<UnresolvedPair>(w);
    return {{"kind", "unresolved-pair"}, {"pair", set_json(g, VertexSet{p.v, p.w})}};
}

auto witness_text(const Graph & g, const Witness & w) -> std::string
{
    if (const auto * c = std::get_if<SetCollision>(&w))
        return set_text(g, c->first) + " and " + set_text(g, c->second) + " have equal distance arrays";
    if (const auto * f = std::get_if<SeparationFailure>(&w))
        return "no member of S is closer to " + g.label(f->x) + " than to " + set_text(g, f->ys);
    const auto & p = std::get<UnresolvedPair>(w);
    return "no pair in S doubly resolves " + g.label(p.v) + " and " + g.label(p.w);
}

auto cells_json(const RookSet & s) -> nlohmann::json
{
    auto out = nlohmann::json::array();
    for (auto c : s.cells())
        out.push_back({c.row, c.col});
    return out;
}

} // namespace lres::cli
