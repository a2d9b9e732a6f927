#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// header `RPC1 <n> <c>`, then n-1 newline-terminated rows of digits; row u
// lists the colors of edges (u,u+1)..(u,n-1), digit 0 meaning uncolored
std::string serialize_coloring(const EdgeColoring& col);
EdgeColoring parse_coloring(std::string_view text);

// target grammar: P<k> or C<k>, e.g. "P8"; lists are comma separated
Target parse_target(std::string_view token);
std::vector<Target> parse_targets(std::string_view list, int expected_count = 0);
std::string target_to_string(const Target& t);

} // namespace ramsey
