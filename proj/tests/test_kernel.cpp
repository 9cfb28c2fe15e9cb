#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rgl/driver.hpp"
#include "rgl/error.hpp"
#include "rgl/kernel.hpp"
#include "rgl/pretty.hpp"

using namespace rgl;

namespace {

// Test bench: a pinned checker state, string-level helpers on top of it.
struct Bench {
  Checker chk;

  Globals& g() { return *chk.globals; }
  Context ctx() { return chk.base(); }

  // Adds declarations; all of them must succeed.
  void prelude(const std::string& src) {
    FileReport rep = check_source(g(), "<prelude>", src);
    for (const ReportItem& it : rep.items) {
      INFO(it.name, ": ", it.message);
      REQUIRE(it.pass);
    }
  }

  CPtr term(const std::string& s) {
    return resolve(g(), {}, parse_term(tokenize(s)));
  }

  Val type_of(const std::string& s) { return infer(ctx(), term(s)); }

  Val value_of(const std::string& s) { return eval(g(), nullptr, term(s)); }

  // Checks `tm : ty` and returns the printed η-long β-normal form.
  std::string norm(const std::string& tm, const std::string& ty) {
    auto [tyv, lvl] = check_is_type(ctx(), term(ty));
    (void)lvl;
    CPtr t = term(tm);
    check(ctx(), t, tyv);
    return pretty(unresolve(g(), {}, normalize(ctx(), t, tyv)));
  }

  bool conv(const std::string& a, const std::string& b, const std::string& ty) {
    auto [tyv, lvl] = check_is_type(ctx(), term(ty));
    (void)lvl;
    CPtr ta = term(a);
    CPtr tb = term(b);
    check(ctx(), ta, tyv);
    check(ctx(), tb, tyv);
    return convertible(ctx(), eval(g(), nullptr, ta), eval(g(), nullptr, tb), tyv);
  }

  CPtr normalize_core(const std::string& tm, const std::string& ty) {
    auto [tyv, lvl] = check_is_type(ctx(), term(ty));
    (void)lvl;
    CPtr t = term(tm);
    check(ctx(), t, tyv);
    return normalize(ctx(), t, tyv);
  }
};

template <class F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const PosError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

const char* kNeutralPrelude =
    "postulate A : Type 0\n"
    "postulate a : A\n"
    "postulate b : A\n"
    "postulate f : A -> A\n"
    "postulate p : Σ (x : A) . A\n"
    "postulate u : Unit\n"
    "postulate u2 : Unit\n"
    "postulate q : Id A a a\n"
    "postulate n : Nat\n";

} // namespace

TEST_CASE("identity eliminator computes on refl") {
  Bench lab;
  lab.prelude(kNeutralPrelude);
  // J(A; C, c, a, a, refl) ≡ c a, with c the diagonal function.
  CHECK(lab.conv("J A (λ x y r . A) (λ x . x) a a refl", "a", "A"));
  // A motive that lands in an identity type.
  CHECK(lab.conv("J A (λ x y r . Id A x x) (λ x . refl) a a refl", "refl", "Id A a a"));
  // Blocked on a postulated identification the eliminator stays stuck.
  CHECK(lab.norm("J A (λ x y r . A) (λ x . x) a a q", "A") ==
        "J A (λ x y r . A) (λ x . x) a a q");
  CHECK_FALSE(lab.conv("J A (λ x y r . A) (λ x . x) a a q", "a", "A"));
}

TEST_CASE("beta laws") {
  Bench lab;
  lab.prelude(kNeutralPrelude);
  SUBCASE("functions") {
    CHECK(lab.conv("(λ x . x : A -> A) a", "a", "A"));
    CHECK(lab.conv("(λ x y . x : A -> A -> A) a b", "a", "A"));
  }
  SUBCASE("pairs") {
    CHECK(lab.conv("fst ((a, b) : Σ (x : A) . A)", "a", "A"));
    CHECK(lab.conv("snd ((a, b) : Σ (x : A) . A)", "b", "A"));
  }
  SUBCASE("numerals") {
    // natrec with successor case λ k r . succ r on the numeral 3, unfolded by
    // hand: 0 ↦ zero, then three successor steps.
    CHECK(lab.norm("natrec (λ m . Nat) zero (λ k r . succ r) (succ (succ (succ zero)))",
                   "Nat") == "succ (succ (succ zero))");
    // Addition of 2 and 2 the same way.
    CHECK(lab.conv("natrec (λ m . Nat) (succ (succ zero)) (λ k r . succ r) (succ (succ zero))",
                   "succ (succ (succ (succ zero)))", "Nat"));
  }
  SUBCASE("let bindings") {
    CHECK(lab.conv("let y : A := a in y", "a", "A"));
  }
}

TEST_CASE("eta laws") {
  Bench lab;
  lab.prelude(kNeutralPrelude);
  SUBCASE("neutral function") {
    CHECK(lab.conv("λ x . f x", "f", "A -> A"));
    CHECK(lab.norm("f", "A -> A") == "λ x . f x");
  }
  SUBCASE("neutral pair") {
    CHECK(lab.conv("(fst p, snd p)", "p", "Σ (x : A) . A"));
    CHECK(lab.norm("p", "Σ (x : A) . A") == "(fst p, snd p)");
  }
  SUBCASE("unit") {
    CHECK(lab.conv("tt", "u", "Unit"));
    CHECK(lab.conv("u", "u2", "Unit"));
    CHECK(lab.norm("u", "Unit") == "tt");
  }
  SUBCASE("eta under binders") {
    CHECK(lab.conv("λ x . λ y . f y", "λ x . f", "A -> A -> A"));
  }
}

TEST_CASE("conversion is an equivalence and a congruence on samples") {
  Bench lab;
  lab.prelude(kNeutralPrelude);
  // reflexivity / symmetry / transitivity over a β/η triangle
  const std::string t1 = "λ x . f x";
  const std::string t2 = "f";
  const std::string t3 = "λ x . (λ y . f y : A -> A) x";
  CHECK(lab.conv(t1, t1, "A -> A"));
  CHECK(lab.conv(t1, t2, "A -> A"));
  CHECK(lab.conv(t2, t1, "A -> A"));
  CHECK(lab.conv(t1, t3, "A -> A"));
  CHECK(lab.conv(t2, t3, "A -> A"));
  // congruence: applying the same neutral head preserves equality
  CHECK(lab.conv("f ((λ x . x : A -> A) a)", "f a", "A"));
  CHECK_FALSE(lab.conv("f a", "f b", "A"));
}

TEST_CASE("distinct canonical forms are not convertible") {
  Bench lab;
  lab.prelude(kNeutralPrelude);
  CHECK_FALSE(lab.conv("zero", "succ zero", "Nat"));
  CHECK_FALSE(lab.conv("succ n", "n", "Nat"));
  CHECK_FALSE(lab.conv("a", "b", "A"));
  CHECK_FALSE(lab.conv("λ x . a", "λ x . b", "A -> A"));
}

TEST_CASE("normalization is idempotent on samples") {
  Bench lab;
  lab.prelude(kNeutralPrelude);
  const std::pair<const char*, const char*> samples[] = {
      {"λ x . f x", "A -> A"},
      {"natrec (λ m . Nat) zero (λ k r . succ r) (succ (succ zero))", "Nat"},
      {"p", "Σ (x : A) . A"},
      {"J A (λ x y r . A) (λ x . x) a a q", "A"},
      {"(λ x . (x, x) : A -> Σ (y : A) . A) a", "Σ (y : A) . A"},
  };
  for (const auto& [tm, ty] : samples) {
    CAPTURE(tm);
    CPtr once = lab.normalize_core(tm, ty);
    std::string printed = pretty(unresolve(lab.g(), {}, once));
    CPtr twice = lab.normalize_core(printed, ty);
    CHECK(core_equal(once, twice));
  }
}

TEST_CASE("normal forms re-check at their types") {
  Bench lab;
  lab.prelude(kNeutralPrelude);
  const std::pair<const char*, const char*> samples[] = {
      {"λ x . f x", "A -> A"},
      {"(a, f a)", "Σ (x : A) . A"},
      {"natrec (λ m . Nat) zero (λ k r . succ r) n", "Nat"},
  };
  for (const auto& [tm, ty] : samples) {
    CAPTURE(tm);
    std::string printed = pretty(unresolve(lab.g(), {}, lab.normalize_core(tm, ty)));
    auto [tyv, lvl] = check_is_type(lab.ctx(), lab.term(ty));
    (void)lvl;
    CHECK_NOTHROW(check(lab.ctx(), lab.term(printed), tyv));
  }
}

TEST_CASE("universe tower") {
  Bench lab;
  SUBCASE("each level lives in the next") {
    for (int i = 0; i <= 2; ++i) {
      auto [v, lvl] = check_is_type(lab.ctx(), lab.term("Type " + std::to_string(i)));
      (void)v;
      CHECK(lvl == i + 1);
    }
  }
  SUBCASE("levels are not cumulative") {
    lab.prelude("postulate S : Type 0\n");
    CHECK(contains(error_of([&] {
            check(lab.ctx(), lab.term("S"), eval(lab.g(), nullptr, lab.term("Type 1")));
          }),
          "type mismatch"));
  }
  SUBCASE("formation takes the larger level") {
    auto [v1, l1] = check_is_type(lab.ctx(), lab.term("Π (X : Type 0) . X -> X"));
    (void)v1;
    CHECK(l1 == 1);
    auto [v2, l2] = check_is_type(lab.ctx(), lab.term("Σ (X : Type 1) . Nat"));
    (void)v2;
    CHECK(l2 == 2);
  }
  SUBCASE("the top universe has no type") {
    CHECK(check_is_type(lab.ctx(), lab.term("Type 3")).second == 4);
    CHECK(contains(error_of([&] { lab.type_of("Π (X : Type 3) . X"); }), "universe"));
  }
}

TEST_CASE("checking errors carry readable messages") {
  Bench lab;
  lab.prelude(kNeutralPrelude);
  CHECK(contains(error_of([&] { lab.term("missing"); }), "unbound identifier 'missing'"));
  CHECK(contains(error_of([&] { lab.type_of("fst n"); }), "projection of non-Σ"));
  CHECK(contains(error_of([&] { lab.type_of("a b"); }), "non-function"));
  CHECK(contains(error_of([&] { lab.norm("refl", "Id Nat zero (succ zero)"); }),
                 "refl endpoints not convertible"));
  CHECK(contains(error_of([&] { lab.norm("λ x . x", "Nat"); }), "non-function type"));
  CHECK(contains(error_of([&] { lab.norm("(a, a)", "Nat"); }), "non-pair type"));
  CHECK(contains(error_of([&] { lab.type_of("λ x . x"); }), "cannot infer"));
  CHECK(contains(error_of([&] { lab.norm("zero", "A") ; }), "type mismatch"));
}

TEST_CASE("defined constants unfold transparently but print by name") {
  Bench lab;
  lab.prelude(kNeutralPrelude);
  lab.prelude(
      "def two : Nat := succ (succ zero)\n"
      "def double : Nat -> Nat := λ m . natrec (λ k . Nat) m (λ k r . succ r) m\n");
  CHECK(lab.conv("double two", "succ (succ (succ (succ zero)))", "Nat"));
  CHECK(lab.conv("two", "succ (succ zero)", "Nat"));
  // Unfolding is by need: a stuck application still prints with the name.
  CHECK(lab.norm("double n", "Nat") != "double n"); // full normal forms unfold
  Val dn = lab.value_of("double n");
  CPtr kept = quote(lab.g(), 0, eval(lab.g(), nullptr, lab.term("Nat")), dn, false);
  CHECK(pretty(unresolve(lab.g(), {}, kept)) == "double n");
}

TEST_CASE("large elimination: types computed by natrec") {
  Bench lab;
  lab.prelude(kNeutralPrelude);
  lab.prelude("def pick : Nat -> Type 0 := λ m . natrec (λ k . Type 0) Unit (λ k r . A) m\n");
  CHECK(lab.conv("tt", "tt", "pick zero"));
  CHECK(lab.norm("a", "pick (succ zero)") == "a");
  // the family really distinguishes its branches
  CHECK(contains(error_of([&] { lab.norm("a", "pick zero"); }), "type mismatch"));
}

TEST_CASE("eliminator motives may be functions rather than lambdas") {
  Bench lab;
  lab.prelude(kNeutralPrelude);
  lab.prelude("def constNat : Nat -> Type 0 := λ m . Nat\n");
  CHECK(lab.conv("natrec constNat zero (λ k r . succ r) (succ zero)", "succ zero", "Nat"));
  lab.prelude("def idMotive : Π (x : A) . Π (y : A) . Id A x y -> Type 0 := λ x y r . A\n");
  CHECK(lab.conv("J A idMotive (λ x . x) a a refl", "a", "A"));
}

TEST_CASE("well-scopedness of quoted normal forms") {
  Bench lab;
  lab.prelude(kNeutralPrelude);
  CPtr nf = lab.normalize_core("λ x . f x", "A -> A");
  CHECK(well_scoped(nf, 0, static_cast<int>(lab.g().entries.size())));
  CPtr nf2 = lab.normalize_core("J A (λ x y r . A) (λ x . x) a a q", "A");
  CHECK(well_scoped(nf2, 0, static_cast<int>(lab.g().entries.size())));
}
