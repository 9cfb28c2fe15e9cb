#pragma once

#include <string>

#include "rgl/value.hpp"

namespace rgl {

// --- evaluation --------------------------------------------------------------

Val eval(const Globals& g, const Env& env, const CPtr& t);

// Eliminator application; each reduces when the principal argument is
// canonical, extends the spine when it is neutral, and does both (lazily)
// when it is glued.
Val do_app(const Globals& g, const Val& fn, Val arg);
Val do_fst(const Globals& g, const Val& v);
Val do_snd(const Globals& g, const Val& v);
Val do_natrec(const Globals& g, Val motive, Val zcase, Val scase, const Val& scrut);
Val do_j(const Globals& g, Val ty, Val motive, Val diag, Val lhs, Val rhs, const Val& eq);

// Classifier values for eliminator arguments, built programmatically. The
// universe level on their codomains is a dispatch marker only and never
// reaches printed output.
Val nat_motive_type();
Val natrec_scase_type(const Globals& g, Val motive);
Val j_motive_type(const Globals& g, Val ty);
Val j_diag_type(const Globals& g, Val ty, Val motive);

// --- quotation ---------------------------------------------------------------

// Type-directed readback at `depth` binders: η-long for Π/Σ/Unit. With
// `unfold` set, defined constants are expanded away (full normal forms);
// without it they print as their names.
CPtr quote(const Globals& g, int depth, const Val& ty, const Val& v, bool unfold);

// quote ∘ eval at the declared type.
CPtr normalize(const Context& ctx, const CPtr& t, const Val& ty);

// --- conversion --------------------------------------------------------------

// Definitional equality, type-directed (η for Π, Σ, Unit). Glued values are
// compared head-first and unfolded only on mismatch.
bool convertible(const Context& ctx, const Val& t, const Val& u, const Val& ty);

// Equality of two types (values of some universe).
bool convertible_types(const Context& ctx, const Val& a, const Val& b);

// --- checking ----------------------------------------------------------------

// Bidirectional checker over core terms. `infer` covers variables, constants,
// applications, projections, saturated eliminators, formers and annotations;
// `check` additionally pushes λ/pair/refl against Π/Σ/Id.
Val infer(const Context& ctx, const CPtr& t);
void check(const Context& ctx, const CPtr& t, const Val& ty);

// Checks that `t` is a type and returns (its value, its universe level).
std::pair<Val, int> check_is_type(const Context& ctx, const CPtr& t);

// Renders a type or a typed value for diagnostics (η-long, definitions kept).
std::string show_type(const Context& ctx, const Val& ty);
std::string show_value(const Context& ctx, const Val& ty, const Val& v);

} // namespace rgl
