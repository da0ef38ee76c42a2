#pragma once

#include <stdexcept>
#include <string>

namespace lres {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DisconnectedGraph : public Error {
public:
    DisconnectedGraph(int u, int v)
        : Error("graph is disconnected: no path between " + std::to_string(u) + " and " + std::to_string(v)),
          u_(u), v_(v)
    {
    }

    auto unreachable_pair() const -> std::pair<int, int> { return {u_, v_}; }

private:
    int u_;
    int v_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string & what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    auto line() const -> int { return line_; }

private:
    int line_;
};

class BudgetExhausted : public Error {
public:
    using Error::Error;
};

} // namespace lres
