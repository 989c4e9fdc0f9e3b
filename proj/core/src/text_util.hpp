#ifndef PUBGRAPH_SRC_TEXT_UTIL_HPP
#define PUBGRAPH_SRC_TEXT_UTIL_HPP

#include <cstddef>
#include <optional>
#include <string_view>

namespace pubgraph::detail {

struct TextPosition {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in bytes
};

/// Position of the first invalid UTF-8 sequence, or nullopt when the
/// input is well-formed.
std::optional<TextPosition> find_invalid_utf8(std::string_view text);

}  // namespace pubgraph::detail

#endif  // PUBGRAPH_SRC_TEXT_UTIL_HPP
