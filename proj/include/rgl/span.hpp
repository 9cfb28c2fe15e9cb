#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace rgl {

// Half-open byte range [begin, end) into a source buffer.
struct Span {
  size_t begin = 0;
  size_t end = 0;

  bool empty() const { return begin >= end; }
  static Span join(Span a, Span b) {
    return Span{a.begin < b.begin ? a.begin : b.begin, a.end > b.end ? a.end : b.end};
  }
};

struct LineCol {
  size_t line = 1; // 1-based
  size_t col = 1;  // 1-based, in bytes
};

inline LineCol line_col(std::string_view source, size_t offset) {
  LineCol lc;
  if (offset > source.size()) offset = source.size();
  for (size_t i = 0; i < offset; ++i) {
    if (source[i] == '\n') {
      ++lc.line;
      lc.col = 1;
    } else {
      ++lc.col;
    }
  }
  return lc;
}

// Renders "file:line:col" for diagnostics.
inline std::string format_pos(std::string_view file, std::string_view source, size_t offset) {
  LineCol lc = line_col(source, offset);
  return std::string(file) + ":" + std::to_string(lc.line) + ":" + std::to_string(lc.col);
}

} // namespace rgl
