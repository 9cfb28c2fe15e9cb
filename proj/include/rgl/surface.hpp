#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rgl/span.hpp"
#include "rgl/token.hpp"

namespace rgl {

// Surface syntax: names are kept verbatim for diagnostics; scope resolution
// happens later, against a checked global state.
struct STerm;
using SPtr = std::shared_ptr<const STerm>;

struct SVar { std::string name; };
struct SPi { std::string binder; SPtr dom, cod; };
struct SLam { std::string binder; SPtr body; };
struct SApp { SPtr fn, arg; };
struct SSigma { std::string binder; SPtr fst, snd; };
struct SPair { SPtr fst, snd; };
struct SFst { SPtr arg; };
struct SSnd { SPtr arg; };
struct SId { SPtr ty, lhs, rhs; };
struct SRefl {};
struct SJ { SPtr ty, motive, diag, lhs, rhs, eq; }; // J A C c x y p
struct SUnit {};
struct STt {};
struct SNat {};
struct SZero {};
struct SSucc { SPtr arg; };
struct SNatRec { SPtr motive, zcase, scase, scrut; };
struct SType { int level; };
struct SLet { std::string binder; SPtr ann, val, body; };
struct SAnn { SPtr tm, ty; };

using STermData = std::variant<SVar, SPi, SLam, SApp, SSigma, SPair, SFst, SSnd, SId, SRefl,
                               SJ, SUnit, STt, SNat, SZero, SSucc, SNatRec, SType, SLet, SAnn>;

struct STerm {
  STermData data;
  Span span;
};

inline SPtr mk(STermData d, Span s) { return std::make_shared<STerm>(STerm{std::move(d), s}); }

enum class DeclKind { Def, Postulate, Eq, FailEq, Norm };

struct Declaration {
  DeclKind kind;
  std::string name;   // Def/Postulate only
  SPtr lhs;           // Def body / Eq lhs / Norm term
  SPtr rhs;           // Eq rhs
  SPtr type;          // annotation for every kind
  Span span;
};

// Parses a whole token stream into declarations, in file order.
std::vector<Declaration> parse_file(const std::vector<Token>& tokens);

// Parses a single term (whole stream must be one term); used by tests/tools.
SPtr parse_term(const std::vector<Token>& tokens);

} // namespace rgl
