#include <string>
#include <vector>

#include "rgl/error.hpp"
#include "rgl/surface.hpp"

namespace rgl {

namespace {

class Parser {
public:
  explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

  std::vector<Declaration> file() {
    std::vector<Declaration> out;
    while (!at_end()) out.push_back(decl());
    return out;
  }

  SPtr whole_term() {
    SPtr t = term();
    if (!at_end()) fail("end of input");
    return t;
  }

private:
  const std::vector<Token>& toks_;
  size_t pos_ = 0;

  const Token& peek(size_t k = 0) const {
    size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == TokenKind::EndOfInput; }

  bool at_kw(Kw k) const { return peek().kind == TokenKind::Keyword && peek().kw == k; }
  bool at_sym(Sym s) const { return peek().kind == TokenKind::Symbol && peek().sym == s; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::EndOfInput ? "end of input" : "'" + t.lexeme + "'";
    throw ParseError(t.span, "expected " + expected + ", found " + found);
  }

  void expect_sym(Sym s, const char* what) {
    if (!at_sym(s)) fail(what);
    advance();
  }

  std::string expect_ident() {
    if (peek().kind != TokenKind::Ident) fail("an identifier");
    return advance().lexeme;
  }

  Span span_from(size_t begin_tok) const {
    size_t last = pos_ == 0 ? 0 : pos_ - 1;
    return Span::join(toks_[begin_tok].span, toks_[last].span);
  }

  Declaration decl() {
    size_t begin = pos_;
    if (at_kw(Kw::Def)) {
      advance();
      Declaration d;
      d.kind = DeclKind::Def;
      d.name = expect_ident();
      expect_sym(Sym::Colon, "':'");
      d.type = term();
      expect_sym(Sym::ColonEq, "':='");
      d.lhs = term();
      d.span = span_from(begin);
      return d;
    }
    if (at_kw(Kw::Postulate)) {
      advance();
      Declaration d;
      d.kind = DeclKind::Postulate;
      d.name = expect_ident();
      expect_sym(Sym::Colon, "':'");
      d.type = term();
      d.span = span_from(begin);
      return d;
    }
    if (peek().kind == TokenKind::Directive) {
      Dir dir = advance().dir;
      Declaration d;
      if (dir == Dir::Norm) {
        d.kind = DeclKind::Norm;
        d.lhs = term();
      } else {
        d.kind = dir == Dir::Eq ? DeclKind::Eq : DeclKind::FailEq;
        d.lhs = atom(); // endpoints are atoms; parenthesize composite terms
        d.rhs = atom();
      }
      expect_sym(Sym::Colon, "':'");
      d.type = term();
      d.span = span_from(begin);
      return d;
    }
    fail("a declaration ('def', 'postulate', or a directive)");
  }

  SPtr term() {
    if (at_kw(Kw::Lambda)) return lambda();
    if (at_kw(Kw::Pi) || at_kw(Kw::Sigma)) return binder();
    if (at_kw(Kw::Let)) return letform();
    return arrow_term();
  }

  SPtr lambda() {
    size_t begin = pos_;
    advance();
    std::vector<std::string> names;
    while (peek().kind == TokenKind::Ident) names.push_back(advance().lexeme);
    if (names.empty()) fail("a binder name");
    expect_sym(Sym::Dot, "'.'");
    SPtr body = term();
    for (size_t i = names.size(); i-- > 0;)
      body = mk(SLam{names[i], body}, span_from(begin));
    return body;
  }

  SPtr binder() {
    size_t begin = pos_;
    bool isPi = peek().kw == Kw::Pi;
    advance();
    std::vector<std::pair<std::string, SPtr>> binds;
    if (!at_sym(Sym::LParen)) fail("'(' opening a binder group");
    while (at_sym(Sym::LParen)) {
      advance();
      std::vector<std::string> names;
      while (peek().kind == TokenKind::Ident) names.push_back(advance().lexeme);
      if (names.empty()) fail("a binder name");
      expect_sym(Sym::Colon, "':'");
      SPtr ty = term();
      expect_sym(Sym::RParen, "')'");
      for (const auto& n : names) binds.emplace_back(n, ty);
    }
    expect_sym(Sym::Dot, "'.'");
    SPtr body = term();
    for (size_t i = binds.size(); i-- > 0;) {
      if (isPi)
        body = mk(SPi{binds[i].first, binds[i].second, body}, span_from(begin));
      else
        body = mk(SSigma{binds[i].first, binds[i].second, body}, span_from(begin));
    }
    return body;
  }

  SPtr letform() {
    size_t begin = pos_;
    advance();
    std::string name = expect_ident();
    expect_sym(Sym::Colon, "':'");
    SPtr ann = term();
    expect_sym(Sym::ColonEq, "':='");
    SPtr val = term();
    if (!at_kw(Kw::In)) fail("'in'");
    advance();
    SPtr body = term();
    return mk(SLet{name, ann, val, body}, span_from(begin));
  }

  SPtr arrow_term() {
    size_t begin = pos_;
    SPtr lhs = app_term();
    if (at_sym(Sym::Arrow)) {
      advance();
      SPtr rhs = term(); // right-associative; binders may follow the arrow
      return mk(SPi{"_", lhs, rhs}, span_from(begin));
    }
    return lhs;
  }

  bool at_atom_start() const {
    if (peek().kind == TokenKind::Ident) return true;
    if (at_sym(Sym::LParen)) return true;
    if (peek().kind == TokenKind::Keyword) {
      switch (peek().kw) {
        case Kw::Refl: case Kw::Tt: case Kw::Unit: case Kw::Nat: case Kw::Zero:
          return true;
        default:
          return false;
      }
    }
    return false;
  }

  SPtr app_term() {
    size_t begin = pos_;
    SPtr head = head_atom();
    while (at_atom_start()) {
      SPtr arg = atom();
      head = mk(SApp{head, arg}, span_from(begin));
    }
    return head;
  }

  // Saturated primitive forms consume a fixed number of atom arguments.
  SPtr head_atom() {
    size_t begin = pos_;
    if (peek().kind == TokenKind::Keyword) {
      switch (peek().kw) {
        case Kw::Id: {
          advance();
          SPtr ty = atom(), l = atom(), r = atom();
          return mk(SId{ty, l, r}, span_from(begin));
        }
        case Kw::J: {
          advance();
          SPtr ty = atom(), motive = atom(), diag = atom(), l = atom(), r = atom(), eq = atom();
          return mk(SJ{ty, motive, diag, l, r, eq}, span_from(begin));
        }
        case Kw::Succ: {
          advance();
          return mk(SSucc{atom()}, span_from(begin));
        }
        case Kw::NatRec: {
          advance();
          SPtr motive = atom(), z = atom(), s = atom(), n = atom();
          return mk(SNatRec{motive, z, s, n}, span_from(begin));
        }
        case Kw::Fst: {
          advance();
          return mk(SFst{atom()}, span_from(begin));
        }
        case Kw::Snd: {
          advance();
          return mk(SSnd{atom()}, span_from(begin));
        }
        case Kw::Type: {
          advance();
          if (peek().kind != TokenKind::NatLit) fail("a universe level literal");
          uint64_t lvl = advance().nat;
          if (lvl > 3) throw ParseError(toks_[pos_ - 1].span, "universe levels range over 0..3");
          return mk(SType{static_cast<int>(lvl)}, span_from(begin));
        }
        default:
          break;
      }
    }
    return atom();
  }

  SPtr atom() {
    size_t begin = pos_;
    const Token& t = peek();
    if (t.kind == TokenKind::Ident) {
      advance();
      return mk(SVar{t.lexeme}, span_from(begin));
    }
    if (t.kind == TokenKind::Keyword) {
      switch (t.kw) {
        case Kw::Refl: advance(); return mk(SRefl{}, span_from(begin));
        case Kw::Tt: advance(); return mk(STt{}, span_from(begin));
        case Kw::Unit: advance(); return mk(SUnit{}, span_from(begin));
        case Kw::Nat: advance(); return mk(SNat{}, span_from(begin));
        case Kw::Zero: advance(); return mk(SZero{}, span_from(begin));
        default: break;
      }
    }
    if (at_sym(Sym::LParen)) {
      advance();
      SPtr first = term();
      if (at_sym(Sym::Comma)) {
        std::vector<SPtr> parts{first};
        while (at_sym(Sym::Comma)) {
          advance();
          parts.push_back(term());
        }
        expect_sym(Sym::RParen, "')'");
        SPtr acc = parts.back();
        for (size_t i = parts.size() - 1; i-- > 0;)
          acc = mk(SPair{parts[i], acc}, span_from(begin));
        return acc;
      }
      if (at_sym(Sym::Colon)) {
        advance();
        SPtr ty = term();
        expect_sym(Sym::RParen, "')'");
        return mk(SAnn{first, ty}, span_from(begin));
      }
      expect_sym(Sym::RParen, "')'");
      return first;
    }
    fail("a term");
  }
};

} // namespace

std::vector<Declaration> parse_file(const std::vector<Token>& tokens) {
  return Parser(tokens).file();
}

SPtr parse_term(const std::vector<Token>& tokens) {
  return Parser(tokens).whole_term();
}

} // namespace rgl
