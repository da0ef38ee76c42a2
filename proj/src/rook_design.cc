#include "lres/rook_design.hh"

#include "lres/errors.hh"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace lres {

RookSet::RookSet(int m, int n) :
    m_(m), n_(n)
{
    if (m < 1 || n < 1)
        throw Error("rook grid dimensions must be positive");
    member_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0);
}

auto RookSet::from_vertex_set(int m, int n, const VertexSet & s) -> RookSet
{
    RookSet out(m, n);
    s.check_range(m * n);
    for (auto v : s)
        out.member_[static_cast<std::size_t>(v)] = 1;
    return out;
}

auto RookSet::full(int m, int n) -> RookSet
{
    RookSet out(m, n);
    std::fill(out.member_.begin(), out.member_.end(), 1);
    return out;
}

auto RookSet::check(Cell c) const -> void
{
    if (c.row < 0 || c.row >= n_ || c.col < 0 || c.col >= m_)
        throw Error("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") outside the " +
            std::to_string(n_) + "x" + std::to_string(m_) + " grid");
}

auto RookSet::flat(Cell c) const -> Vertex
{
    check(c);
    return c.col * n_ + c.row;
}

auto RookSet::contains(Cell c) const -> bool { return member_[static_cast<std::size_t>(flat(c))]; }
auto RookSet::insert(Cell c) -> void { member_[static_cast<std::size_t>(flat(c))] = 1; }
auto RookSet::erase(Cell c) -> void { member_[static_cast<std::size_t>(flat(c))] = 0; }

auto RookSet::size() const -> int
{
    return static_cast<int>(std::count(member_.begin(), member_.end(), 1));
}

auto RookSet::row_count(int row) const -> int
{
    int c = 0;
    for (int col = 0; col < m_; ++col)
        c += contains({row, col});
    return c;
}

auto RookSet::col_count(int col) const -> int
{
    int c = 0;
    for (int row = 0; row < n_; ++row)
        c += contains({row, col});
    return c;
}

auto RookSet::cells() const -> std::vector<Cell>
{
    std::vector<Cell> out;
    for (int col = 0; col < m_; ++col)
        for (int row = 0; row < n_; ++row)
            if (contains({row, col}))
                out.push_back({row, col});
    return out;
}

auto RookSet::to_vertex_set() const -> VertexSet
{
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < member_.size(); ++i)
        if (member_[i])
            vs.push_back(static_cast<Vertex>(i));
    return VertexSet(std::move(vs));
}

namespace {
    auto require_grid(const RookSet & s) -> void
    {
        if (s.m() < 2 || s.n() < 2)
            throw Error("quadruples need at least two rows and two columns");
    }

    auto choose2(long long a) -> long long { return a < 2 ? 0 : a * (a - 1) / 2; }
}

auto quadruple_coverage(const RookSet & s) -> Verdict<Quadruple>
{
    require_grid(s);
    for (int a = 0; a < s.m(); ++a)
        for (int b = a + 1; b < s.m(); ++b) {
            int first = -1;
            for (int row = 0; row < s.n(); ++row)
                if (! s.contains({row, a}) && ! s.contains({row, b})) {
                    if (first < 0)
                        first = row;
                    else
                        return Verdict<Quadruple>::fail({a, b, first, row});
                }
        }
    return Verdict<Quadruple>::pass();
}

auto classify_conditions(const RookSet & s) -> RookClassification
{
    require_grid(s);
    RookClassification out;
    for (int col = 0; col < s.m() && ! out.type1_centre; ++col)
        for (int row = 0; row < s.n() && ! out.type1_centre; ++row) {
            bool ok = s.contains({row, col});
            for (int c = 0; c < s.m() && ok; ++c)
                for (int r = 0; r < s.n() && ok; ++r)
                    if (c != col && r != row)
                        ok = s.contains({r, c});
            if (ok)
                out.type1_centre = Cell{row, col};
        }

    bool lines = true;
    for (int row = 0; row < s.n() && lines; ++row)
        lines = s.row_count(row) >= 2;
    for (int col = 0; col < s.m() && lines; ++col)
        lines = s.col_count(col) >= 2;
    out.type2 = lines && quadruple_coverage(s).holds;
    return out;
}

auto sufficiency_check(const RookSet & s) -> Verdict<RookWitness>
{
    if (s.m() < s.n() || s.n() < 6)
        throw Error("sufficiency test needs m >= n >= 6, got m=" + std::to_string(s.m()) + " n=" + std::to_string(s.n()));
    for (int row = 0; row < s.n(); ++row)
        if (auto c = s.row_count(row); c < 2)
            return Verdict<RookWitness>::fail(SparseLine{true, row, c});
    for (int col = 0; col < s.m(); ++col)
        if (auto c = s.col_count(col); c < 2)
            return Verdict<RookWitness>::fail(SparseLine{false, col, c});
    if (auto q = quadruple_coverage(s); ! q.holds)
        return Verdict<RookWitness>::fail(*q.witness);
    return Verdict<RookWitness>::pass();
}

auto rook_lower_bound(int m, int n) -> RookBound
{
    if (m < 2 || n < 2)
        throw Error("rook lower bound needs m, n >= 2");
    RookBound out{0, false};
    if (n > m) {
        std::swap(m, n);
        out.transposed = true;
    }
    const long long total = choose2(n);
    for (long long s = 0; s <= static_cast<long long>(m) * n; ++s) {
        const long long q = s / m, r = s % m;
        if (r * choose2(n - q - 1) + (m - r) * choose2(n - q) <= total) {
            out.value = static_cast<int>(s);
            return out;
        }
    }
    out.value = m * n;
    return out;
}

auto design_to_set(const Design & d, int m, int n) -> RookSet
{
    if (static_cast<int>(d.blocks.size()) != m)
        throw Error("design has " + std::to_string(d.blocks.size()) + " blocks, grid has " + std::to_string(m) + " columns");
    if (d.points != n)
        throw Error("design has " + std::to_string(d.points) + " points, grid has " + std::to_string(n) + " rows");
    auto s = RookSet::full(m, n);
    for (int col = 0; col < m; ++col)
        for (auto p : d.blocks[static_cast<std::size_t>(col)]) {
            if (p < 0 || p >= n)
                throw Error("point " + std::to_string(p) + " out of range in block " + std::to_string(col));
            if (! s.contains({p, col}))
                throw Error("point " + std::to_string(p) + " repeated in block " + std::to_string(col));
            s.erase({p, col});
        }
    return s;
}

auto set_to_design(const RookSet & s) -> Design
{
    Design d;
    d.points = s.n();
    d.blocks.resize(static_cast<std::size_t>(s.m()));
    for (int col = 0; col < s.m(); ++col)
        for (int row = 0; row < s.n(); ++row)
            if (! s.contains({row, col}))
                d.blocks[static_cast<std::size_t>(col)].push_back(row);
    return d;
}

auto to_string(const DesignViolation & v) -> std::string
{
    switch (v.condition) {
    case 1: return "block " + std::to_string(v.block) + " is too large";
    case 2: return "point " + std::to_string(v.point) + " lies in too many blocks";
    case 3:
        return "points " + std::to_string(v.point) + " and " + std::to_string(v.other_point) + " share blocks " +
            std::to_string(v.block) + " and " + std::to_string(v.other_block);
    }
    return "unknown violation";
}

auto validate_design(const Design & d, int m, int n) -> Verdict<DesignViolation>
{
    std::vector<int> occurrences(static_cast<std::size_t>(std::max(n, 0)), 0);
    for (std::size_t j = 0; j < d.blocks.size(); ++j) {
        const auto & block = d.blocks[j];
        if (static_cast<int>(block.size()) > n - 2)
            return Verdict<DesignViolation>::fail({1, static_cast<int>(j)});
        for (auto p : block) {
            if (p < 0 || p >= n)
                throw Error("point " + std::to_string(p) + " out of range");
            ++occurrences[static_cast<std::size_t>(p)];
        }
    }
    for (int p = 0; p < n; ++p)
        if (occurrences[static_cast<std::size_t>(p)] > m - 2)
            return Verdict<DesignViolation>::fail({2, -1, -1, p});

    // first block holding each pair
    std::vector<int> owner(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (std::size_t j = 0; j < d.blocks.size(); ++j) {
        auto block = d.blocks[j];
        std::sort(block.begin(), block.end());
        for (std::size_t x = 0; x < block.size(); ++x)
            for (std::size_t y = x + 1; y < block.size(); ++y) {
                auto & o = owner[static_cast<std::size_t>(block[x] * n + block[y])];
                if (o >= 0)
                    return Verdict<DesignViolation>::fail({3, o, static_cast<int>(j), block[x], block[y]});
                o = static_cast<int>(j);
            }
    }
    return Verdict<DesignViolation>::pass();
}

namespace {
    auto parse_row(std::string_view line, int lineno) -> std::vector<int>
    {
        std::vector<int> out;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                ++pos;
            if (pos == line.size())
                break;
            int v = 0;
            auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
            if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
                throw ParseError(lineno, "expected point indices");
            pos = static_cast<std::size_t>(ptr - line.data());
            out.push_back(v);
        }
        return out;
    }
}

auto parse_design(std::string_view text) -> Design
{
    Design d;
    std::optional<int> block_count;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            if (line.find_first_not_of(" \t\r") == hash)
                continue; // comment line
            line = line.substr(0, hash);
        }
        auto vals = parse_row(line, lineno);
        if (! block_count) {
            if (vals.empty())
                continue;
            if (vals.size() != 2 || vals[0] < 0 || vals[1] < 0)
                throw ParseError(lineno, "expected header 'points blocks'");
            d.points = vals[0];
            block_count = vals[1];
            continue;
        }
        if (static_cast<int>(d.blocks.size()) == *block_count) {
            if (! vals.empty())
                throw ParseError(lineno, "more blocks than the header declares");
            continue;
        }
        for (auto p : vals)
            if (p < 0 || p >= d.points)
                throw ParseError(lineno, "point " + std::to_string(p) + " out of range");
        std::sort(vals.begin(), vals.end());
        if (std::adjacent_find(vals.begin(), vals.end()) != vals.end())
            throw ParseError(lineno, "repeated point in block");
        d.blocks.push_back(std::move(vals));
    }
    if (! block_count)
        throw ParseError(lineno, "missing header");
    // trailing empty blocks may have been stripped by editors
    while (static_cast<int>(d.blocks.size()) < *block_count)
        d.blocks.emplace_back();
    return d;
}

auto write_design(const Design & d) -> std::string
{
    std::ostringstream out;
    out << d.points << ' ' << d.blocks.size() << '\n';
    for (const auto & block : d.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i)
            out << (i ? " " : "") << block[i];
        out << '\n';
    }
    return out.str();
}

auto read_design_file(const std::filesystem::path & path) -> Design
{
    std::ifstream in(path);
    if (! in)
        throw Error("cannot open design file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_design(buf.str());
}

} // namespace lres
