#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rgl/driver.hpp"
#include "rgl/error.hpp"
#include "rgl/kernel.hpp"
#include "rgl/pretty.hpp"

#include <algorithm>

using namespace rgl;

namespace {

FileReport run(Checker& chk, const std::string& src, const char* path = "<test>") {
  return check_source(*chk.globals, path, src);
}

const ReportItem& item(const FileReport& rep, const std::string& name) {
  auto it = std::find_if(rep.items.begin(), rep.items.end(),
                         [&](const ReportItem& i) { return i.name == name; });
  REQUIRE(it != rep.items.end());
  return *it;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("inference of universes and annotated reflexivity") {
  Checker chk;
  Globals& g = *chk.globals;
  Context ctx = chk.base();
  Val u0ty = infer(ctx, resolve(g, {}, parse_term(tokenize("Type 0"))));
  CHECK(convertible_types(ctx, u0ty, eval(g, nullptr, resolve(g, {}, parse_term(tokenize("Type 1"))))));

  // refl flows through an annotation: its inferred type is Id A x x.
  FileReport rep = run(chk,
                       "postulate A : Type 0\n"
                       "postulate x : A\n"
                       "def loop : Id A x x := (refl : Id A x x)\n");
  CHECK(rep.fail == 0);
  Val lty = infer(chk.base(), resolve(g, {}, parse_term(tokenize("loop"))));
  Val want = eval(g, nullptr, resolve(g, {}, parse_term(tokenize("Id A x x"))));
  CHECK(convertible_types(chk.base(), lty, want));
}

TEST_CASE("checking rejects shape mismatches") {
  Checker chk;
  FileReport rep = run(chk,
                       "postulate A : Type 0\n"
                       "def bad : Π (X : Type 0) . X := λ x . x\n");
  CHECK(rep.aborted);
  CHECK(contains(item(rep, "bad").message, "type mismatch"));

  Checker chk2;
  FileReport rep2 = run(chk2, "def ok : Id Nat zero zero := refl\n");
  CHECK(rep2.fail == 0);

  Checker chk3;
  FileReport rep3 = run(chk3, "def bad : Id Nat zero (succ zero) := refl\n");
  CHECK(contains(item(rep3, "bad").message, "refl endpoints not convertible"));
}

TEST_CASE("declaration reports carry kinds, names, and positions") {
  Checker chk;
  FileReport rep = run(chk,
                       "postulate A : Type 0\n"
                       "postulate a : A\n"
                       "#eq a a : A\n"
                       "#norm (λ x . x : A -> A) a : A\n"
                       "#fail-eq zero (succ zero) : Nat\n",
                       "demo.rgl");
  CHECK(rep.pass == 5);
  CHECK(rep.fail == 0);
  CHECK(item(rep, "A").kind == "postulate");
  CHECK(item(rep, "eq#1").pass);
  CHECK(item(rep, "norm#2").message == "a");
  CHECK(item(rep, "fail-eq#3").kind == "fail-eq");
}

TEST_CASE("directive failures are recorded but do not abort the file") {
  Checker chk;
  FileReport rep = run(chk,
                       "postulate A : Type 0\n"
                       "postulate a : A\n"
                       "postulate b : A\n"
                       "#eq a b : A\n"
                       "def later : A := a\n"
                       "#fail-eq a a : A\n"
                       "#eq later a : A\n",
                       "demo.rgl");
  CHECK_FALSE(rep.aborted);
  CHECK(rep.fail == 2);
  CHECK(rep.pass == 5);
  const ReportItem& eq1 = item(rep, "eq#1");
  CHECK_FALSE(eq1.pass);
  CHECK(contains(eq1.message, "not definitionally equal"));
  CHECK(contains(eq1.message, "demo.rgl:4:"));
  const ReportItem& fe = item(rep, "fail-eq#2");
  CHECK_FALSE(fe.pass);
  CHECK(contains(fe.message, "unexpectedly definitionally equal"));
  CHECK(item(rep, "eq#3").pass); // the def between failures still entered scope
}

TEST_CASE("a failing definition aborts the remainder of its file") {
  Checker chk;
  FileReport rep = run(chk,
                       "postulate A : Type 0\n"
                       "def broken : A := A\n"
                       "postulate never : A\n",
                       "demo.rgl");
  CHECK(rep.aborted);
  CHECK(rep.items.size() == 2); // 'never' was not reached
  CHECK_FALSE(item(rep, "broken").pass);
  CHECK(contains(item(rep, "broken").message, "demo.rgl:2:"));
}

TEST_CASE("parse errors produce a single failing file item") {
  Checker chk;
  FileReport rep = run(chk, "def oops : Nat :=\n", "demo.rgl");
  CHECK(rep.aborted);
  REQUIRE(rep.items.size() == 1);
  CHECK(rep.items[0].name == "(parse)");
  CHECK(rep.items[0].kind == "file");
  CHECK(contains(rep.items[0].message, "demo.rgl:"));
}

TEST_CASE("redefinition is rejected") {
  Checker chk;
  FileReport rep = run(chk,
                       "postulate A : Type 0\n"
                       "postulate A : Type 1\n");
  CHECK(contains(rep.items[1].message, "redefinition of 'A'"));
}

TEST_CASE("postulates are opaque") {
  Checker chk;
  FileReport rep = run(chk,
                       "postulate g : Nat -> Nat\n"
                       "#norm g zero : Nat\n"
                       "def h : Nat -> Nat := λ m . succ m\n"
                       "#norm h zero : Nat\n");
  CHECK(rep.fail == 0);
  CHECK(item(rep, "norm#1").message == "g zero");       // stuck neutral
  CHECK(item(rep, "norm#2").message == "succ zero");    // definitions compute
}

TEST_CASE("eliminator motive diagnostics") {
  Checker chk;
  FileReport rep = run(chk,
                       "postulate A : Type 0\n"
                       "def bad : Nat := natrec zero zero (λ k r . r) zero\n");
  CHECK(contains(item(rep, "bad").message, "natrec motive"));

  Checker chk2;
  FileReport rep2 = run(chk2,
                        "postulate A : Type 0\n"
                        "postulate a : A\n"
                        "def bad : A := J A (λ x y . A) (λ x . x) a a refl\n");
  CHECK(contains(item(rep2, "bad").message, "J motive"));
}

TEST_CASE("dependent pairs and projections check") {
  Checker chk;
  FileReport rep = run(chk,
                       "def Vec : Nat -> Type 0 := λ m . natrec (λ k . Type 0) Unit (λ k r . Nat) m\n"
                       "def packed : Σ (m : Nat) . Vec m := (zero, tt)\n"
                       "def len : Nat := fst packed\n"
                       "#eq len zero : Nat\n"
                       "#norm snd packed : Vec (fst packed)\n");
  CHECK(rep.fail == 0);
  CHECK(item(rep, "norm#2").message == "tt"); // unit η inside a dependent family
}

TEST_CASE("let bindings elaborate and are transparent") {
  Checker chk;
  FileReport rep = run(chk,
                       "def three : Nat := let two : Nat := succ (succ zero) in succ two\n"
                       "#eq three succ (succ (succ zero)) : Nat\n");
  // #eq endpoints are atoms, so an unparenthesized `succ …` cannot parse.
  CHECK(rep.aborted);
  CHECK(rep.items[0].name == "(parse)");

  Checker chk2;
  FileReport rep2 = run(chk2,
                        "def three : Nat := let two : Nat := succ (succ zero) in succ two\n"
                        "#eq three (succ (succ (succ zero))) : Nat\n");
  CHECK(rep2.fail == 0);
}

TEST_CASE("binder groups desugar to nested quantifiers") {
  Checker chk;
  FileReport rep = run(chk,
                       "def diag : Π (A : Type 0) (x y : A) . Σ (u v : A) . Unit :=\n"
                       "  λ A x y . (x, y, tt)\n"
                       "#norm diag Nat zero (succ zero) : Σ (u v : Nat) . Unit\n");
  CHECK(rep.fail == 0);
  CHECK(item(rep, "norm#1").message == "(zero, succ zero, tt)");
}

TEST_CASE("shadowing resolves to the innermost binder") {
  Checker chk;
  FileReport rep = run(chk,
                       "postulate A : Type 0\n"
                       "postulate a : A\n"
                       "def inner : A -> A -> A := λ x . λ x . x\n"
                       "postulate f : A -> A\n"
                       "#eq (inner (f a) a) a : A\n");
  CHECK(rep.fail == 0);
}

TEST_CASE("file reading failures surface as io items") {
  Checker chk;
  FileReport rep = check_file(*chk.globals, "/nonexistent/missing.rgl");
  CHECK(rep.aborted);
  REQUIRE(rep.items.size() == 1);
  CHECK(rep.items[0].name == "(io)");
  CHECK(contains(rep.items[0].message, "cannot open file"));
}

TEST_CASE("checker state persists across sources") {
  Checker chk;
  CHECK(run(chk, "postulate A : Type 0\npostulate a : A\n").fail == 0);
  CHECK(run(chk, "def pick : A := a\n#eq pick a : A\n").fail == 0);
}
