#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cohomlen/errors.hpp"
#include "cohomlen/graph.hpp"
#include "cohomlen/monomial_ideal.hpp"

namespace cohomlen {

class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        detail_(message), line_(line), column_(column) {}

  const std::string& detail() const { return detail_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// Parses `ring <d>; ideal <term>, <term>, ...;` with one or more ideal
/// statements. Terms are `x<i>^<e>` factors joined by `*`, or the literal
/// `1` (unit) or `0` (contributes nothing). Indices are 1-based.
std::vector<MonomialIdeal> parse_ideals(std::string_view source);

/// Convenience for sources holding exactly one ideal statement.
MonomialIdeal parse_ideal(std::string_view source);

/// Parses `graph <d>; edges 1-2, 2-3;`.
Graph parse_graph(std::string_view source);

std::string to_dsl(const MonomialIdeal& ideal);
std::string to_dsl(const Graph& graph);

}  // namespace cohomlen
