#include "pubgraph/error.hpp"

namespace pubgraph {

std::string ParseError::describe(const std::string& message, std::size_t line,
                                 std::size_t column) {
  if (line == 0) return message;
  std::string out = "line " + std::to_string(line);
  if (column > 0) out += ", column " + std::to_string(column);
  out += ": " + message;
  return out;
}

}  // namespace pubgraph
