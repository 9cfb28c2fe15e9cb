#include <cstdint>
#include <unordered_map>

#include "rgl/error.hpp"
#include "rgl/token.hpp"

namespace rgl {

namespace {

const std::unordered_map<std::string, Kw>& keyword_table() {
  static const std::unordered_map<std::string, Kw> table = {
      {"def", Kw::Def},       {"postulate", Kw::Postulate},
      {"let", Kw::Let},       {"in", Kw::In},
      {"Π", Kw::Pi},          {"Σ", Kw::Sigma},
      {"λ", Kw::Lambda},      {"Id", Kw::Id},
      {"refl", Kw::Refl},     {"J", Kw::J},
      {"Unit", Kw::Unit},     {"tt", Kw::Tt},
      {"Nat", Kw::Nat},       {"zero", Kw::Zero},
      {"succ", Kw::Succ},     {"natrec", Kw::NatRec},
      {"Type", Kw::Type},     {"fst", Kw::Fst},
      {"snd", Kw::Snd},
  };
  return table;
}

bool is_ascii_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ascii_ident_cont(char c) {
  return is_ascii_ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
}

// Length of the UTF-8 sequence starting at src[i] (0 on malformed input).
size_t utf8_len(std::string_view src, size_t i) {
  unsigned char c = static_cast<unsigned char>(src[i]);
  size_t n = 0;
  if (c < 0x80) n = 1;
  else if ((c & 0xE0) == 0xC0) n = 2;
  else if ((c & 0xF0) == 0xE0) n = 3;
  else if ((c & 0xF8) == 0xF0) n = 4;
  else return 0;
  if (i + n > src.size()) return 0;
  for (size_t k = 1; k < n; ++k)
    if ((static_cast<unsigned char>(src[i + k]) & 0xC0) != 0x80) return 0;
  return n;
}

} // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  size_t i = 0;
  auto push = [&](TokenKind kind, size_t begin, size_t end) -> Token& {
    Token t;
    t.kind = kind;
    t.lexeme = std::string(src.substr(begin, end - begin));
    t.span = Span{begin, end};
    out.push_back(std::move(t));
    return out.back();
  };

  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      push(TokenKind::Symbol, i, i + 2).sym = Sym::Arrow;
      i += 2;
      continue;
    }
    if (c == ':') {
      if (i + 1 < src.size() && src[i + 1] == '=') {
        push(TokenKind::Symbol, i, i + 2).sym = Sym::ColonEq;
        i += 2;
      } else {
        push(TokenKind::Symbol, i, i + 1).sym = Sym::Colon;
        ++i;
      }
      continue;
    }
    if (c == '(') { push(TokenKind::Symbol, i, i + 1).sym = Sym::LParen; ++i; continue; }
    if (c == ')') { push(TokenKind::Symbol, i, i + 1).sym = Sym::RParen; ++i; continue; }
    if (c == '.') { push(TokenKind::Symbol, i, i + 1).sym = Sym::Dot; ++i; continue; }
    if (c == ',') { push(TokenKind::Symbol, i, i + 1).sym = Sym::Comma; ++i; continue; }
    if (c == '#') {
      size_t begin = i++;
      while (i < src.size() && ((src[i] >= 'a' && src[i] <= 'z') || src[i] == '-')) ++i;
      std::string word(src.substr(begin, i - begin));
      Dir d;
      if (word == "#eq") d = Dir::Eq;
      else if (word == "#fail-eq") d = Dir::FailEq;
      else if (word == "#norm") d = Dir::Norm;
      else throw LexError(Span{begin, i}, "unknown directive '" + word + "'");
      push(TokenKind::Directive, begin, i).dir = d;
      continue;
    }
    if (c >= '0' && c <= '9') {
      size_t begin = i;
      uint64_t v = 0;
      while (i < src.size() && src[i] >= '0' && src[i] <= '9') {
        v = v * 10 + static_cast<uint64_t>(src[i] - '0');
        ++i;
      }
      push(TokenKind::NatLit, begin, i).nat = v;
      continue;
    }
    if (is_ascii_ident_start(c) || static_cast<unsigned char>(c) >= 0x80) {
      size_t begin = i;
      // Greek binder letters are single-rune keywords, not identifier parts.
      size_t n = utf8_len(src, i);
      if (n == 0) throw LexError(Span{i, i + 1}, "malformed UTF-8 sequence");
      std::string first(src.substr(i, n));
      if (first == "Π" || first == "Σ" || first == "λ") {
        Token& t = push(TokenKind::Keyword, begin, begin + n);
        t.kw = keyword_table().at(first);
        i += n;
        continue;
      }
      while (i < src.size()) {
        char d = src[i];
        if (is_ascii_ident_cont(d)) { ++i; continue; }
        if (static_cast<unsigned char>(d) >= 0x80) {
          size_t m = utf8_len(src, i);
          if (m == 0) throw LexError(Span{i, i + 1}, "malformed UTF-8 sequence");
          std::string rune(src.substr(i, m));
          if (rune == "Π" || rune == "Σ" || rune == "λ") break;
          i += m;
          continue;
        }
        break;
      }
      std::string word(src.substr(begin, i - begin));
      auto it = keyword_table().find(word);
      if (it != keyword_table().end())
        push(TokenKind::Keyword, begin, i).kw = it->second;
      else
        push(TokenKind::Ident, begin, i);
      continue;
    }
    throw LexError(Span{i, i + 1}, std::string("unexpected character '") + c + "'");
  }

  Token eoi;
  eoi.kind = TokenKind::EndOfInput;
  eoi.span = Span{src.size(), src.size()};
  out.push_back(std::move(eoi));
  return out;
}

} // namespace rgl
