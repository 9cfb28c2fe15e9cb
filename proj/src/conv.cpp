#include <optional>

#include "rgl/error.hpp"
#include "rgl/kernel.hpp"

namespace rgl {

namespace {

bool conv(const Globals& g, int d, const Val& ty, const Val& u, const Val& v);
bool conv_ty(const Globals& g, int d, const Val& a, const Val& b);
bool conv_base(const Globals& g, int d, const Val& u0, const Val& v0);
bool conv_neutral(const Globals& g, int d, const VNeutral& nu, const VNeutral& nv);
bool spines_convertible(const Globals& g, int d, Val ty, Val partial,
                        const std::vector<Elim>& su, const std::vector<Elim>& sv);

// Glued comparison loop: decide equality at matching constant heads without
// unfolding; otherwise peel definitions one layer at a time (newer constant
// first) until both sides are rigid. Engaged result = decided here.
std::optional<bool> glue_loop(const Globals& g, int d, Val& u, Val& v) {
  while (true) {
    const auto* au = std::get_if<VGlued>(&u->v);
    const auto* av = std::get_if<VGlued>(&v->v);
    if (au && av) {
      if (au->id == av->id) {
        const GlobalEntry& e = g.entries[au->id];
        if (spines_convertible(g, d, e.type, e.value, au->spine, av->spine)) return true;
        Val uu = au->unfolded->force();
        Val vv = av->unfolded->force();
        u = std::move(uu);
        v = std::move(vv);
      } else if (au->id > av->id) {
        u = Val(au->unfolded->force());
      } else {
        v = Val(av->unfolded->force());
      }
    } else if (au) {
      u = Val(au->unfolded->force());
    } else if (av) {
      v = Val(av->unfolded->force());
    } else {
      return std::nullopt;
    }
  }
}

bool conv(const Globals& g, int d, const Val& ty, const Val& u, const Val& v) {
  if (u == v) return true;
  const Val& t = force(ty);
  if (const auto* pi = std::get_if<VPi>(&t->v)) {
    Val x = fresh_var(d, pi->dom, pi->cod.hint);
    return conv(g, d + 1, pi->cod.apply(x), do_app(g, u, x), do_app(g, v, x));
  }
  if (const auto* sg = std::get_if<VSigma>(&t->v)) {
    Val fu = do_fst(g, u);
    if (!conv(g, d, sg->fst, fu, do_fst(g, v))) return false;
    return conv(g, d, sg->snd.apply(fu), do_snd(g, u), do_snd(g, v));
  }
  if (std::get_if<VUnit>(&t->v)) return true;
  if (std::get_if<VType>(&t->v)) return conv_ty(g, d, u, v);
  return conv_base(g, d, u, v);
}

bool conv_ty(const Globals& g, int d, const Val& a, const Val& b) {
  if (a == b) return true;
  Val u = a, v = b;
  if (auto decided = glue_loop(g, d, u, v)) return *decided;
  if (u->v.index() != v->v.index()) return false;
  if (const auto* pa = std::get_if<VPi>(&u->v)) {
    const auto& pb = std::get<VPi>(v->v);
    if (!conv_ty(g, d, pa->dom, pb.dom)) return false;
    Val x = fresh_var(d, pa->dom, pa->cod.hint);
    return conv_ty(g, d + 1, pa->cod.apply(x), pb.cod.apply(x));
  }
  if (const auto* sa = std::get_if<VSigma>(&u->v)) {
    const auto& sb = std::get<VSigma>(v->v);
    if (!conv_ty(g, d, sa->fst, sb.fst)) return false;
    Val x = fresh_var(d, sa->fst, sa->snd.hint);
    return conv_ty(g, d + 1, sa->snd.apply(x), sb.snd.apply(x));
  }
  if (const auto* ia = std::get_if<VId>(&u->v)) {
    const auto& ib = std::get<VId>(v->v);
    return conv_ty(g, d, ia->ty, ib.ty) && conv(g, d, ia->ty, ia->lhs, ib.lhs) &&
           conv(g, d, ia->ty, ia->rhs, ib.rhs);
  }
  if (std::get_if<VNat>(&u->v)) return true;
  if (std::get_if<VUnit>(&u->v)) return true;
  if (const auto* ta = std::get_if<VType>(&u->v))
    return ta->level == std::get<VType>(v->v).level;
  if (const auto* na = std::get_if<VNeutral>(&u->v))
    return conv_neutral(g, d, *na, std::get<VNeutral>(v->v));
  return false;
}

// Values at ℕ, identity types, or stuck types: the shapes decide.
bool conv_base(const Globals& g, int d, const Val& u0, const Val& v0) {
  Val u = u0, v = v0;
  if (auto decided = glue_loop(g, d, u, v)) return *decided;
  if (u->v.index() != v->v.index()) return false;
  if (std::get_if<VZero>(&u->v)) return true;
  if (const auto* su = std::get_if<VSucc>(&u->v))
    return conv_base(g, d, su->pred, std::get<VSucc>(v->v).pred);
  if (std::get_if<VRefl>(&u->v)) return true;
  if (std::get_if<VTt>(&u->v)) return true;
  if (const auto* nu = std::get_if<VNeutral>(&u->v))
    return conv_neutral(g, d, *nu, std::get<VNeutral>(v->v));
  return false;
}

bool conv_neutral(const Globals& g, int d, const VNeutral& nu, const VNeutral& nv) {
  Val head_ty;
  Val partial;
  if (const auto* xu = std::get_if<NVar>(&nu.head)) {
    const auto* xv = std::get_if<NVar>(&nv.head);
    if (!xv || xu->level != xv->level) return false;
    head_ty = xu->type;
    partial = vmk(VNeutral{nu.head, {}});
  } else {
    const auto& pu = std::get<NPost>(nu.head);
    const auto* pv = std::get_if<NPost>(&nv.head);
    if (!pv || pu.id != pv->id) return false;
    head_ty = g.entries[pu.id].type;
    partial = g.entries[pu.id].value;
  }
  return spines_convertible(g, d, std::move(head_ty), std::move(partial), nu.spine, nv.spine);
}

bool spines_convertible(const Globals& g, int d, Val ty, Val partial,
                        const std::vector<Elim>& su, const std::vector<Elim>& sv) {
  if (su.size() != sv.size()) return false;
  for (size_t i = 0; i < su.size(); ++i) {
    if (su[i].index() != sv[i].index()) return false;
    if (const auto* au = std::get_if<EApp>(&su[i])) {
      const auto& av = std::get<EApp>(sv[i]);
      const auto* pi = std::get_if<VPi>(&force(ty)->v);
      if (!pi) throw KernelBug("spine application against a non-function type");
      if (!conv(g, d, pi->dom, au->arg, av.arg)) return false;
      ty = pi->cod.apply(au->arg);
      partial = do_app(g, partial, au->arg);
    } else if (std::get_if<EFst>(&su[i])) {
      const auto* sg = std::get_if<VSigma>(&force(ty)->v);
      if (!sg) throw KernelBug("spine projection against a non-pair type");
      ty = sg->fst;
      partial = do_fst(g, partial);
    } else if (std::get_if<ESnd>(&su[i])) {
      const auto* sg = std::get_if<VSigma>(&force(ty)->v);
      if (!sg) throw KernelBug("spine projection against a non-pair type");
      ty = sg->snd.apply(do_fst(g, partial));
      partial = do_snd(g, partial);
    } else if (const auto* ru = std::get_if<ENatRec>(&su[i])) {
      const auto& rv = std::get<ENatRec>(sv[i]);
      if (!conv(g, d, nat_motive_type(), ru->motive, rv.motive)) return false;
      if (!conv(g, d, do_app(g, ru->motive, vmk(VZero{})), ru->zcase, rv.zcase)) return false;
      if (!conv(g, d, natrec_scase_type(g, ru->motive), ru->scase, rv.scase)) return false;
      ty = do_app(g, ru->motive, partial);
      partial = do_natrec(g, ru->motive, ru->zcase, ru->scase, partial);
    } else {
      const auto& ju = std::get<EJ>(su[i]);
      const auto& jv = std::get<EJ>(sv[i]);
      if (!conv_ty(g, d, ju.ty, jv.ty)) return false;
      if (!conv(g, d, j_motive_type(g, ju.ty), ju.motive, jv.motive)) return false;
      if (!conv(g, d, j_diag_type(g, ju.ty, ju.motive), ju.diag, jv.diag)) return false;
      if (!conv(g, d, ju.ty, ju.lhs, jv.lhs)) return false;
      if (!conv(g, d, ju.ty, ju.rhs, jv.rhs)) return false;
      Val cxy = do_app(g, do_app(g, ju.motive, ju.lhs), ju.rhs);
      ty = do_app(g, cxy, partial);
      partial = do_j(g, ju.ty, ju.motive, ju.diag, ju.lhs, ju.rhs, partial);
    }
  }
  return true;
}

} // namespace

bool convertible(const Context& ctx, const Val& t, const Val& u, const Val& ty) {
  return conv(*ctx.globals, ctx.depth(), ty, t, u);
}

bool convertible_types(const Context& ctx, const Val& a, const Val& b) {
  return conv_ty(*ctx.globals, ctx.depth(), a, b);
}

} // namespace rgl
