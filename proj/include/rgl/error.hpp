#pragma once

#include <stdexcept>
#include <string>

#include "rgl/span.hpp"

namespace rgl {

// Base for all positioned failures reported to the user. The span indexes the
// buffer that was being processed; the driver attaches file names.
struct PosError : std::runtime_error {
  Span span;
  PosError(Span s, const std::string& msg) : std::runtime_error(msg), span(s) {}
};

struct LexError : PosError {
  using PosError::PosError;
};

struct ParseError : PosError {
  using PosError::PosError;
};

// Scope resolution and type checking failures (user errors).
struct CheckError : PosError {
  using PosError::PosError;
};

// Violation of a kernel invariant: always a checker bug, never user error.
struct KernelBug : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace rgl
