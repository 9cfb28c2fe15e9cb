#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rgl/span.hpp"

namespace rgl {

enum class TokenKind : uint8_t {
  Ident,
  Keyword,   // def postulate let in Π Σ λ Id refl J Unit tt Nat zero succ natrec Type fst snd
  Directive, // #eq #fail-eq #norm
  NatLit,
  Symbol,    // ( ) . : := , ->
  EndOfInput,
};

enum class Kw : uint8_t {
  Def, Postulate, Let, In,
  Pi, Sigma, Lambda,
  Id, Refl, J,
  Unit, Tt, Nat, Zero, Succ, NatRec,
  Type, Fst, Snd,
};

enum class Dir : uint8_t { Eq, FailEq, Norm };

enum class Sym : uint8_t { LParen, RParen, Dot, Colon, ColonEq, Comma, Arrow };

struct Token {
  TokenKind kind = TokenKind::EndOfInput;
  std::string lexeme; // exact source bytes
  Span span;
  // Discriminated payloads; only the one matching `kind` is meaningful.
  Kw kw{};
  Dir dir{};
  Sym sym{};
  uint64_t nat = 0;
};

// Lexical analysis of a whole buffer. Comments (`--` to end of line) and
// whitespace are skipped; the returned stream always ends with EndOfInput.
// Throws LexError (see error.hpp) on bytes outside the grammar.
std::vector<Token> tokenize(std::string_view source);

} // namespace rgl
