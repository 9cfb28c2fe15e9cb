#pragma once

#include <memory>
#include <string>
#include <variant>

#include "rgl/span.hpp"
#include "rgl/surface.hpp"

namespace rgl {

// Core syntax: nameless variables (de Bruijn indices) with name hints kept
// for printing, and constant references resolved to global ids. Spans are
// carried through from the surface tree so errors point at source.
struct CTerm;
using CPtr = std::shared_ptr<const CTerm>;

struct CVar { int index; std::string hint; };
struct CConst { int id; };
struct CPi { std::string hint; CPtr dom, cod; };
struct CLam { std::string hint; CPtr body; };
struct CApp { CPtr fn, arg; };
struct CSigma { std::string hint; CPtr fst, snd; };
struct CPair { CPtr fst, snd; };
struct CFst { CPtr arg; };
struct CSnd { CPtr arg; };
struct CId { CPtr ty, lhs, rhs; };
struct CRefl {};
struct CJ { CPtr ty, motive, diag, lhs, rhs, eq; };
struct CUnit {};
struct CTt {};
struct CNat {};
struct CZero {};
struct CSucc { CPtr arg; };
struct CNatRec { CPtr motive, zcase, scase, scrut; };
struct CType { int level; };
struct CLet { std::string hint; CPtr ann, val, body; };
struct CAnn { CPtr tm, ty; };

using CTermData = std::variant<CVar, CConst, CPi, CLam, CApp, CSigma, CPair, CFst, CSnd, CId,
                               CRefl, CJ, CUnit, CTt, CNat, CZero, CSucc, CNatRec, CType,
                               CLet, CAnn>;

struct CTerm {
  CTermData data;
  Span span;
};

inline CPtr cmk(CTermData d, Span s) { return std::make_shared<CTerm>(CTerm{std::move(d), s}); }

// Structural equality, ignoring spans and name hints (indices carry binding).
bool core_equal(const CPtr& a, const CPtr& b);

// True when every variable index is smaller than the binder depth above it
// and every constant id is < num_globals.
bool well_scoped(const CPtr& t, int depth, int num_globals);

struct Globals;

// Scope resolution: binder names become indices, free names become resolved
// constant references. Throws CheckError on unbound identifiers.
CPtr resolve(const Globals& globals, const std::vector<std::string>& binders, const SPtr& t);

// Core back to concrete syntax, freshening hints so the result prints without
// accidental capture. Used for diagnostics and #norm output.
SPtr unresolve(const Globals& globals, std::vector<std::string> names, const CPtr& t);

} // namespace rgl
