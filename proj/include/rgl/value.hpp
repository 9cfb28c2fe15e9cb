#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "rgl/core.hpp"

namespace rgl {

// Semantic domain for normalization by evaluation. Values are either
// canonical forms, neutrals (a blocked head with an eliminator spine), or
// "glued" applications of defined constants that remember both the constant
// head (for printing and fast conversion) and a lazily computed unfolding.
struct ValueData;
using Val = std::shared_ptr<const ValueData>;

struct EnvNode;
using Env = std::shared_ptr<const EnvNode>;
struct EnvNode {
  Val v;
  Env next;
};

inline Env env_push(Env e, Val v) { return std::make_shared<EnvNode>(EnvNode{std::move(v), std::move(e)}); }

inline const Val& env_get(const Env& e, int index) {
  const EnvNode* n = e.get();
  while (index-- > 0) n = n->next.get();
  return n->v;
}

// A deferred value; memoized so shared unfoldings are computed once.
struct LazySlot {
  mutable std::function<Val()> compute;
  mutable std::optional<Val> memo;
  const Val& force() const {
    if (!memo) {
      memo = compute();
      compute = nullptr;
    }
    return *memo;
  }
};
using LazyVal = std::shared_ptr<LazySlot>;
LazyVal delay(std::function<Val()> f);

// Binder bodies: either a core term closed over an environment, or a host
// function (used to build types the checker needs programmatically).
struct Closure {
  std::string hint;
  const Globals* g = nullptr;  // set for term closures
  std::variant<std::pair<Env, CPtr>, std::function<Val(Val)>> impl;

  Val apply(Val arg) const;
};

Closure close(const Globals& g, std::string hint, Env env, CPtr body);
Closure close_fn(std::string hint, std::function<Val(Val)> f);

struct VPi { Val dom; Closure cod; };
struct VLam { Closure body; };
struct VSigma { Val fst; Closure snd; };
struct VPair { Val fst, snd; };
struct VId { Val ty, lhs, rhs; };
struct VRefl {};
struct VUnit {};
struct VTt {};
struct VNat {};
struct VZero {};
struct VSucc { Val pred; };
struct VType { int level; };

// Eliminator spine entries. The value the spine hangs off is the principal
// argument (the function, the pair, the scrutinee, the identification).
struct EApp { Val arg; };
struct EFst {};
struct ESnd {};
struct ENatRec { Val motive, zcase, scase; };
struct EJ { Val ty, motive, diag, lhs, rhs; };
using Elim = std::variant<EApp, EFst, ESnd, ENatRec, EJ>;

// Neutral heads: a bound variable (carrying its type, which drives η-long
// quoting and spine-typed conversion) or an opaque postulated constant.
struct NVar {
  int level;
  Val type;
  std::string hint;
};
struct NPost { int id; };
using Head = std::variant<NVar, NPost>;

struct VNeutral {
  Head head;
  std::vector<Elim> spine;
};

// A defined constant applied to a spine. `unfolded` evaluates the same value
// with the definition expanded; conversion tries head+spine first and only
// forces on mismatch.
struct VGlued {
  int id;
  std::vector<Elim> spine;
  LazyVal unfolded;
};

using ValueVariant = std::variant<VPi, VLam, VSigma, VPair, VId, VRefl, VUnit, VTt, VNat,
                                  VZero, VSucc, VType, VNeutral, VGlued>;

struct ValueData {
  ValueVariant v;
};

inline Val vmk(ValueVariant v) { return std::make_shared<ValueData>(ValueData{std::move(v)}); }

// Unfolds glued heads until a canonical or truly neutral form appears.
const Val& force(const Val& v);

struct GlobalEntry {
  std::string name;
  CPtr type_term;            // checked annotation
  Val type;                  // its value
  std::optional<CPtr> body;  // absent for postulates
  Val value;                 // glued def value, or opaque neutral
};

struct Globals {
  std::vector<GlobalEntry> entries;
  std::unordered_map<std::string, int> by_name;

  const GlobalEntry* lookup(const std::string& n) const {
    auto it = by_name.find(n);
    return it == by_name.end() ? nullptr : &entries[it->second];
  }
  int add(GlobalEntry e);
};

// Checking context: parallel stacks of name hints and types (index 0 of a
// core variable refers to the back), plus the matching evaluation
// environment. Extending with a fresh variable keeps both in step.
struct Context {
  const Globals* globals = nullptr;
  std::vector<std::string> names;
  std::vector<Val> types;
  Env env;

  int depth() const { return static_cast<int>(names.size()); }
  Context extend(const std::string& hint, Val ty) const;         // fresh variable
  Context define(const std::string& hint, Val ty, Val v) const;  // let binding
};

Val fresh_var(int level, Val ty, std::string hint);

} // namespace rgl
