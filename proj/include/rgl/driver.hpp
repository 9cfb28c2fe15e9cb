#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rgl/kernel.hpp"
#include "rgl/surface.hpp"

namespace rgl {

struct ReportItem {
  std::string name;
  std::string kind;
  bool pass = false;
  std::string message;  // diagnostics, or the printed normal form for #norm
  double millis = 0.0;

  bool operator==(const ReportItem&) const = default;
};

// Closures and glued values hold a pointer to the Globals block, so checker
// state is pinned behind a unique_ptr and never copied or moved out.
struct Checker {
  std::unique_ptr<Globals> globals = std::make_unique<Globals>();
  Context base() const { return Context{globals.get(), {}, {}, nullptr}; }
};

// Checks one declaration; def/postulate extend the state on success.
// Directive items come back with an empty name for the caller to fill.
// When path/source are given, failure messages are prefixed file:line:col.
ReportItem check_declaration(Globals& g, const Declaration& d,
                             const std::string* path = nullptr,
                             const std::string* source = nullptr);

struct FileReport {
  std::string path;
  std::vector<ReportItem> items;
  bool aborted = false;  // a def/postulate (or the parse) failed; rest skipped
  int pass = 0, fail = 0;
};

// Parses and checks a whole source buffer. A def/postulate failure aborts the
// remainder of the file (everything after it is out of scope); directive
// failures are recorded and checking continues.
FileReport check_source(Globals& g, const std::string& path, const std::string& source);

// read + check_source; lex/parse/IO errors become a single failed item.
FileReport check_file(Globals& g, const std::string& path);

std::string read_text_file(const std::string& path);  // throws std::runtime_error

} // namespace rgl
