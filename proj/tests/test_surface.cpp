#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cctype>
#include <string>
#include <vector>

#include "rgl/error.hpp"
#include "rgl/pretty.hpp"
#include "rgl/surface.hpp"
#include "rgl/token.hpp"

using namespace rgl;

namespace {

// Hand-derived token sequences, written down before the lexer existed and
// kept frozen since: each entry is (kind, lexeme).
struct ExpTok {
  TokenKind kind;
  std::string lexeme;
};

void expect_stream(const std::string& src, const std::vector<ExpTok>& expected) {
  auto toks = tokenize(src);
  REQUIRE(toks.size() == expected.size());
  for (size_t i = 0; i < toks.size(); ++i) {
    CAPTURE(i);
    CHECK(toks[i].kind == expected[i].kind);
    CHECK(toks[i].lexeme == expected[i].lexeme);
  }
}

bool gap_is_blank(std::string_view src, size_t from, size_t to) {
  // Between tokens only whitespace and `--` comments may appear.
  size_t i = from;
  while (i < to) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (c == '-' && i + 1 < to && src[i + 1] == '-') {
      while (i < to && src[i] != '\n') ++i;
    } else {
      return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE("lexing the smallest lambda") {
  expect_stream("λ x . x", {
                               {TokenKind::Keyword, "λ"},
                               {TokenKind::Ident, "x"},
                               {TokenKind::Symbol, "."},
                               {TokenKind::Ident, "x"},
                               {TokenKind::EndOfInput, ""},
                           });
}

TEST_CASE("lexing empty input") {
  expect_stream("", {{TokenKind::EndOfInput, ""}});
}

TEST_CASE("lexing a definitional-equality directive") {
  // Directive token, then eight tokens (seven content tokens plus end-of-input).
  const std::string src = "#eq refl refl : Id Nat zero zero";
  expect_stream(src, {
                         {TokenKind::Directive, "#eq"},
                         {TokenKind::Keyword, "refl"},
                         {TokenKind::Keyword, "refl"},
                         {TokenKind::Symbol, ":"},
                         {TokenKind::Keyword, "Id"},
                         {TokenKind::Keyword, "Nat"},
                         {TokenKind::Keyword, "zero"},
                         {TokenKind::Keyword, "zero"},
                         {TokenKind::EndOfInput, ""},
                     });
  auto toks = tokenize(src);
  CHECK(toks.size() - 1 == 8); // after the directive: 8 tokens incl. end-of-input
}

TEST_CASE("token spans reconstruct the input") {
  const std::string src =
      "def comp : Π (A : Type 0) . A -> A := λ A x . x -- tail comment\n"
      "#norm (succ zero) : Nat\n";
  auto toks = tokenize(src);
  size_t prev_end = 0;
  for (size_t i = 0; i + 1 < toks.size(); ++i) {
    const Token& t = toks[i];
    CHECK(t.span.begin < t.span.end);                 // non-empty
    CHECK(t.span.begin >= prev_end);                  // increasing, non-overlapping
    CHECK(src.substr(t.span.begin, t.span.end - t.span.begin) == t.lexeme);
    CHECK(gap_is_blank(src, prev_end, t.span.begin)); // gaps are blank/comments only
    prev_end = t.span.end;
  }
  CHECK(gap_is_blank(src, prev_end, src.size()));
}

TEST_CASE("lexical error carries a span") {
  try {
    tokenize("def x ; y");
    FAIL("expected a lexical error");
  } catch (const LexError& e) {
    CHECK(e.span.begin == 6);
    CHECK(e.span.end == 7);
  }
}

TEST_CASE("parsing the smallest definition") {
  auto decls = parse_file(tokenize("def id : Π (A : Type 0) . A -> A := λ A x . x"));
  REQUIRE(decls.size() == 1);
  const Declaration& d = decls[0];
  CHECK(d.kind == DeclKind::Def);
  CHECK(d.name == "id");
  // Type: Π (A : Type 0) . Π (_ : A) . A
  const auto* pi = std::get_if<SPi>(&d.type->data);
  REQUIRE(pi != nullptr);
  CHECK(pi->binder == "A");
  CHECK(std::holds_alternative<SType>(pi->dom->data));
  const auto* inner = std::get_if<SPi>(&pi->cod->data);
  REQUIRE(inner != nullptr);
  CHECK(inner->binder == "_");
  // Body: λ A . λ x . x
  const auto* lam = std::get_if<SLam>(&d.lhs->data);
  REQUIRE(lam != nullptr);
  CHECK(lam->binder == "A");
  const auto* lam2 = std::get_if<SLam>(&lam->body->data);
  REQUIRE(lam2 != nullptr);
  CHECK(lam2->binder == "x");
  CHECK(std::holds_alternative<SVar>(lam2->body->data));
}

TEST_CASE("arrow is right-associative") {
  auto t = parse_term(tokenize("A -> B -> C"));
  const auto* p1 = std::get_if<SPi>(&t->data);
  REQUIRE(p1 != nullptr);
  CHECK(p1->binder == "_");
  CHECK(std::get<SVar>(p1->dom->data).name == "A");
  const auto* p2 = std::get_if<SPi>(&p1->cod->data);
  REQUIRE(p2 != nullptr);
  CHECK(std::get<SVar>(p2->dom->data).name == "B");
  CHECK(std::get<SVar>(p2->cod->data).name == "C");
}

TEST_CASE("application is left-associative") {
  auto t = parse_term(tokenize("f x y"));
  const auto* outer = std::get_if<SApp>(&t->data);
  REQUIRE(outer != nullptr);
  CHECK(std::get<SVar>(outer->arg->data).name == "y");
  const auto* innerApp = std::get_if<SApp>(&outer->fn->data);
  REQUIRE(innerApp != nullptr);
  CHECK(std::get<SVar>(innerApp->fn->data).name == "f");
  CHECK(std::get<SVar>(innerApp->arg->data).name == "x");
}

TEST_CASE("eta-law directive parses with two endpoints and a type") {
  auto decls = parse_file(tokenize("#eq (λ x . f x) f : A -> B"));
  REQUIRE(decls.size() == 1);
  const Declaration& d = decls[0];
  CHECK(d.kind == DeclKind::Eq);
  const auto* lam = std::get_if<SLam>(&d.lhs->data);
  REQUIRE(lam != nullptr);
  CHECK(std::get<SVar>(d.rhs->data).name == "f");
  CHECK(std::holds_alternative<SPi>(d.type->data));
}

TEST_CASE("binder groups and pair sugar") {
  auto t = parse_term(tokenize("Π (x y : A) (z : B x y) . C"));
  const auto* p1 = std::get_if<SPi>(&t->data);
  REQUIRE(p1 != nullptr);
  CHECK(p1->binder == "x");
  const auto* p2 = std::get_if<SPi>(&p1->cod->data);
  REQUIRE(p2 != nullptr);
  CHECK(p2->binder == "y");
  const auto* p3 = std::get_if<SPi>(&p2->cod->data);
  REQUIRE(p3 != nullptr);
  CHECK(p3->binder == "z");

  auto trip = parse_term(tokenize("(a, b, c)"));
  const auto* pr = std::get_if<SPair>(&trip->data);
  REQUIRE(pr != nullptr);
  CHECK(std::holds_alternative<SPair>(pr->snd->data)); // right-nested
}

TEST_CASE("saturated forms") {
  auto t = parse_term(tokenize("J A (λ x y p . C) (λ x . c) a b q"));
  CHECK(std::holds_alternative<SJ>(t->data));
  auto n = parse_term(tokenize("natrec (λ n . Nat) zero (λ k r . succ r) (succ zero)"));
  CHECK(std::holds_alternative<SNatRec>(n->data));
  auto i = parse_term(tokenize("Id Nat zero (succ zero)"));
  CHECK(std::holds_alternative<SId>(i->data));
  // A saturated head may be further applied.
  auto more = parse_term(tokenize("fst p q"));
  const auto* app = std::get_if<SApp>(&more->data);
  REQUIRE(app != nullptr);
  CHECK(std::holds_alternative<SFst>(app->fn->data));
}

TEST_CASE("parse errors carry the expected-token set") {
  try {
    parse_file(tokenize("def x : Nat"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":=") != std::string::npos);
  }
}

TEST_CASE("pretty-printing round-trips") {
  const char* samples[] = {
      "def id : Π (A : Type 0) . A -> A := λ A x . x",
      "postulate funext : Π (A : Type 0) (B : A -> Type 0) (f g : Π (x : A) . B x) . (Π (x : A) . Id (B x) (f x) (g x)) -> Id (Π (x : A) . B x) f g",
      "#eq (λ x . f x) f : A -> B",
      "#fail-eq zero (succ zero) : Nat",
      "#norm natrec (λ n . Nat) zero (λ k r . succ r) (succ (succ zero)) : Nat",
      "def pairs : Σ (A : Type 0) . Σ (R : A -> A -> Type 0) . Π (x : A) . R x x := (Nat, (λ x y . Id Nat x y, λ x . refl))",
      "def uses : Nat := let two : Nat := succ (succ zero) in natrec (λ n . Nat) two (λ k r . succ r) two",
      "def ann : Nat := (zero : Nat)",
      "def j : Π (A : Type 0) (x y : A) (p : Id A x y) . Id A x y := λ A x y p . J A (λ a b q . Id A a b) (λ a . refl) x y p",
  };
  for (const char* s : samples) {
    CAPTURE(s);
    auto d1 = parse_file(tokenize(s));
    REQUIRE(d1.size() == 1);
    std::string printed = pretty(d1[0]);
    CAPTURE(printed);
    auto d2 = parse_file(tokenize(printed));
    REQUIRE(d2.size() == 1);
    CHECK(decl_equal_syntax(d1[0], d2[0]));
  }
}
