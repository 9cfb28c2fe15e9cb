#include <algorithm>
#include <functional>

#include "rgl/error.hpp"
#include "rgl/kernel.hpp"
#include "rgl/pretty.hpp"

namespace rgl {

namespace {
template <class... Fs> struct Overload : Fs... { using Fs::operator()...; };
template <class... Fs> Overload(Fs...) -> Overload<Fs...>;
} // namespace

// --- scope resolution ---------------------------------------------------------

namespace {

class Resolver {
public:
  Resolver(const Globals& g, std::vector<std::string> scope)
      : g_(g), scope_(std::move(scope)) {}

  CPtr go(const SPtr& t) {
    const Span sp = t->span;
    return std::visit(
        Overload{
            [&](const SVar& v) -> CPtr {
              for (size_t i = scope_.size(); i-- > 0;) {
                if (scope_[i] == v.name)
                  return cmk(CVar{static_cast<int>(scope_.size() - 1 - i), v.name}, sp);
              }
              auto it = g_.by_name.find(v.name);
              if (it != g_.by_name.end()) return cmk(CConst{it->second}, sp);
              throw CheckError(sp, "unbound identifier '" + v.name + "'");
            },
            [&](const SPi& p) -> CPtr {
              CPtr dom = go(p.dom);
              scope_.push_back(p.binder);
              CPtr cod = go(p.cod);
              scope_.pop_back();
              return cmk(CPi{p.binder, std::move(dom), std::move(cod)}, sp);
            },
            [&](const SLam& l) -> CPtr {
              scope_.push_back(l.binder);
              CPtr body = go(l.body);
              scope_.pop_back();
              return cmk(CLam{l.binder, std::move(body)}, sp);
            },
            [&](const SApp& a) -> CPtr { return cmk(CApp{go(a.fn), go(a.arg)}, sp); },
            [&](const SSigma& s) -> CPtr {
              CPtr fst = go(s.fst);
              scope_.push_back(s.binder);
              CPtr snd = go(s.snd);
              scope_.pop_back();
              return cmk(CSigma{s.binder, std::move(fst), std::move(snd)}, sp);
            },
            [&](const SPair& p) -> CPtr { return cmk(CPair{go(p.fst), go(p.snd)}, sp); },
            [&](const SFst& f) -> CPtr { return cmk(CFst{go(f.arg)}, sp); },
            [&](const SSnd& s) -> CPtr { return cmk(CSnd{go(s.arg)}, sp); },
            [&](const SId& i) -> CPtr { return cmk(CId{go(i.ty), go(i.lhs), go(i.rhs)}, sp); },
            [&](const SRefl&) -> CPtr { return cmk(CRefl{}, sp); },
            [&](const SJ& j) -> CPtr {
              return cmk(CJ{go(j.ty), go(j.motive), go(j.diag), go(j.lhs), go(j.rhs), go(j.eq)},
                         sp);
            },
            [&](const SUnit&) -> CPtr { return cmk(CUnit{}, sp); },
            [&](const STt&) -> CPtr { return cmk(CTt{}, sp); },
            [&](const SNat&) -> CPtr { return cmk(CNat{}, sp); },
            [&](const SZero&) -> CPtr { return cmk(CZero{}, sp); },
            [&](const SSucc& s) -> CPtr { return cmk(CSucc{go(s.arg)}, sp); },
            [&](const SNatRec& n) -> CPtr {
              return cmk(CNatRec{go(n.motive), go(n.zcase), go(n.scase), go(n.scrut)}, sp);
            },
            [&](const SType& t2) -> CPtr { return cmk(CType{t2.level}, sp); },
            [&](const SLet& l) -> CPtr {
              CPtr ann = go(l.ann);
              CPtr val = go(l.val);
              scope_.push_back(l.binder);
              CPtr body = go(l.body);
              scope_.pop_back();
              return cmk(CLet{l.binder, std::move(ann), std::move(val), std::move(body)}, sp);
            },
            [&](const SAnn& a) -> CPtr { return cmk(CAnn{go(a.tm), go(a.ty)}, sp); },
        },
        t->data);
  }

private:
  const Globals& g_;
  std::vector<std::string> scope_;
};

} // namespace

CPtr resolve(const Globals& globals, const std::vector<std::string>& binders, const SPtr& t) {
  return Resolver(globals, binders).go(t);
}

// --- core back to concrete syntax ----------------------------------------------

namespace {

std::string freshen(const std::vector<std::string>& names, const std::string& hint) {
  if (hint == "_") return hint; // arrow binders are unreferenced by construction
  std::string h = hint.empty() ? "x" : hint;
  while (std::find(names.begin(), names.end(), h) != names.end()) h += "'";
  return h;
}

} // namespace

SPtr unresolve(const Globals& g, std::vector<std::string> names, const CPtr& t) {
  const Span sp = t->span;
  const auto sub = [&](const CPtr& s) { return unresolve(g, names, s); };
  const auto under = [&](const std::string& hint, const CPtr& s, std::string* out) {
    *out = freshen(names, hint);
    std::vector<std::string> inner = names;
    inner.push_back(*out);
    return unresolve(g, std::move(inner), s);
  };
  return std::visit(
      Overload{
          [&](const CVar& v) -> SPtr {
            size_t i = names.size() - 1 - static_cast<size_t>(v.index);
            return mk(SVar{names[i]}, sp);
          },
          [&](const CConst& c) -> SPtr { return mk(SVar{g.entries[c.id].name}, sp); },
          [&](const CPi& p) -> SPtr {
            std::string b;
            SPtr dom = sub(p.dom);
            SPtr cod = under(p.hint, p.cod, &b);
            return mk(SPi{b, std::move(dom), std::move(cod)}, sp);
          },
          [&](const CLam& l) -> SPtr {
            std::string b;
            SPtr body = under(l.hint, l.body, &b);
            return mk(SLam{b, std::move(body)}, sp);
          },
          [&](const CApp& a) -> SPtr { return mk(SApp{sub(a.fn), sub(a.arg)}, sp); },
          [&](const CSigma& s) -> SPtr {
            std::string b;
            SPtr fst = sub(s.fst);
            SPtr snd = under(s.hint, s.snd, &b);
            return mk(SSigma{b, std::move(fst), std::move(snd)}, sp);
          },
          [&](const CPair& p) -> SPtr { return mk(SPair{sub(p.fst), sub(p.snd)}, sp); },
          [&](const CFst& f) -> SPtr { return mk(SFst{sub(f.arg)}, sp); },
          [&](const CSnd& s) -> SPtr { return mk(SSnd{sub(s.arg)}, sp); },
          [&](const CId& i) -> SPtr { return mk(SId{sub(i.ty), sub(i.lhs), sub(i.rhs)}, sp); },
          [&](const CRefl&) -> SPtr { return mk(SRefl{}, sp); },
          [&](const CJ& j) -> SPtr {
            return mk(SJ{sub(j.ty), sub(j.motive), sub(j.diag), sub(j.lhs), sub(j.rhs),
                         sub(j.eq)},
                      sp);
          },
          [&](const CUnit&) -> SPtr { return mk(SUnit{}, sp); },
          [&](const CTt&) -> SPtr { return mk(STt{}, sp); },
          [&](const CNat&) -> SPtr { return mk(SNat{}, sp); },
          [&](const CZero&) -> SPtr { return mk(SZero{}, sp); },
          [&](const CSucc& s) -> SPtr { return mk(SSucc{sub(s.arg)}, sp); },
          [&](const CNatRec& n) -> SPtr {
            return mk(SNatRec{sub(n.motive), sub(n.zcase), sub(n.scase), sub(n.scrut)}, sp);
          },
          [&](const CType& t2) -> SPtr { return mk(SType{t2.level}, sp); },
          [&](const CLet& l) -> SPtr {
            std::string b;
            SPtr ann = sub(l.ann);
            SPtr val = sub(l.val);
            SPtr body = under(l.hint, l.body, &b);
            return mk(SLet{b, std::move(ann), std::move(val), std::move(body)}, sp);
          },
          [&](const CAnn& a) -> SPtr { return mk(SAnn{sub(a.tm), sub(a.ty)}, sp); },
      },
      t->data);
}

// --- diagnostics ----------------------------------------------------------------

std::string show_type(const Context& ctx, const Val& ty) {
  CPtr q = quote(*ctx.globals, ctx.depth(), vmk(VType{4}), ty, false);
  return pretty(unresolve(*ctx.globals, ctx.names, q));
}

std::string show_value(const Context& ctx, const Val& ty, const Val& v) {
  CPtr q = quote(*ctx.globals, ctx.depth(), ty, v, false);
  return pretty(unresolve(*ctx.globals, ctx.names, q));
}

// --- bidirectional checking ------------------------------------------------------

namespace {

// Motive checking for the saturated eliminators: the expected domains are
// known (from the scrutinee's type), so λ-binders may be peeled against them
// directly, and whatever remains must infer a matching Π-telescope. Returns
// the motive's value (in the original environment) and the universe level it
// lands in.
using DomFn = std::function<Val(const std::vector<Val>&)>;

int expect_universe(const Context& ctx, const Val& v, const Span& sp, const char* what) {
  const auto* u = std::get_if<VType>(&force(v)->v);
  if (!u)
    throw CheckError(sp, std::string(what) + " must land in a universe, found " +
                             show_type(ctx, v));
  return u->level;
}

std::pair<Val, int> check_motive(const Context& ctx, const CPtr& tm,
                                 const std::vector<DomFn>& doms, const char* what) {
  Context cur = ctx;
  std::vector<Val> vars;
  const CPtr* t = &tm;
  size_t i = 0;
  while (i < doms.size()) {
    const auto* lam = std::get_if<CLam>(&(*t)->data);
    if (!lam) break;
    Val dom = doms[i](vars);
    Val x = fresh_var(cur.depth(), dom, lam->hint);
    cur = cur.define(lam->hint, dom, x);
    vars.push_back(std::move(x));
    t = &lam->body;
    ++i;
  }
  int level;
  if (i == doms.size()) {
    level = expect_universe(cur, infer(cur, *t), (*t)->span, what);
  } else {
    Val rest = infer(cur, *t);
    for (; i < doms.size(); ++i) {
      const auto* pi = std::get_if<VPi>(&force(rest)->v);
      if (!pi)
        throw CheckError((*t)->span, std::string(what) + " has type " + show_type(cur, rest) +
                                         ", expected a function over the scrutinee telescope");
      Val dom = doms[i](vars);
      if (!convertible_types(cur, pi->dom, dom))
        throw CheckError((*t)->span, std::string(what) + " domain mismatch: expected " +
                                         show_type(cur, dom) + ", found " +
                                         show_type(cur, pi->dom));
      Val x = fresh_var(cur.depth(), dom, pi->cod.hint);
      Val next = pi->cod.apply(x);
      cur = cur.define(pi->cod.hint, dom, x);
      vars.push_back(std::move(x));
      rest = std::move(next);
    }
    level = expect_universe(cur, rest, (*t)->span, what);
  }
  return {eval(*ctx.globals, ctx.env, tm), level};
}

} // namespace

namespace {

// The tower stops at Type 3; level 4 exists only as the inferred type of
// Type 3 itself and may never be reached by a type former.
int former_level(Span sp, const char* what, int level) {
  if (level > 3)
    throw CheckError(sp, std::string("universe level mismatch: this ") + what +
                             " would live above Type 3");
  return level;
}

} // namespace

std::pair<Val, int> check_is_type(const Context& ctx, const CPtr& t) {
  Val ity = infer(ctx, t);
  const auto* u = std::get_if<VType>(&force(ity)->v);
  if (!u)
    throw CheckError(t->span,
                     "expected a type, found a term of type " + show_type(ctx, ity));
  return {eval(*ctx.globals, ctx.env, t), u->level};
}

Val infer(const Context& ctx, const CPtr& t) {
  const Globals& g = *ctx.globals;
  const Span sp = t->span;
  return std::visit(
      Overload{
          [&](const CVar& v) -> Val {
            return ctx.types[ctx.types.size() - 1 - static_cast<size_t>(v.index)];
          },
          [&](const CConst& c) -> Val { return g.entries[c.id].type; },
          [&](const CPi& p) -> Val {
            auto [domv, i] = check_is_type(ctx, p.dom);
            Context inner = ctx.extend(p.hint, domv);
            auto [codv, j] = check_is_type(inner, p.cod);
            (void)codv;
            return vmk(VType{former_level(sp, "Π type", std::max(i, j))});
          },
          [&](const CSigma& s) -> Val {
            auto [fstv, i] = check_is_type(ctx, s.fst);
            Context inner = ctx.extend(s.hint, fstv);
            auto [sndv, j] = check_is_type(inner, s.snd);
            (void)sndv;
            return vmk(VType{former_level(sp, "Σ type", std::max(i, j))});
          },
          [&](const CLam&) -> Val {
            throw CheckError(sp, "cannot infer a type for an unannotated function literal");
          },
          [&](const CPair&) -> Val {
            throw CheckError(sp, "cannot infer a type for an unannotated pair");
          },
          [&](const CRefl&) -> Val {
            throw CheckError(sp, "cannot infer a type for refl; annotate its identity type");
          },
          [&](const CApp& a) -> Val {
            Val fty = infer(ctx, a.fn);
            const auto* pi = std::get_if<VPi>(&force(fty)->v);
            if (!pi)
              throw CheckError(sp, "applied a non-function of type " + show_type(ctx, fty));
            check(ctx, a.arg, pi->dom);
            return pi->cod.apply(eval(g, ctx.env, a.arg));
          },
          [&](const CFst& f) -> Val {
            Val sty = infer(ctx, f.arg);
            const auto* sg = std::get_if<VSigma>(&force(sty)->v);
            if (!sg)
              throw CheckError(sp, "projection of non-Σ value of type " + show_type(ctx, sty));
            return sg->fst;
          },
          [&](const CSnd& s) -> Val {
            Val sty = infer(ctx, s.arg);
            const auto* sg = std::get_if<VSigma>(&force(sty)->v);
            if (!sg)
              throw CheckError(sp, "projection of non-Σ value of type " + show_type(ctx, sty));
            return sg->snd.apply(do_fst(g, eval(g, ctx.env, s.arg)));
          },
          [&](const CId& i) -> Val {
            auto [tyv, lvl] = check_is_type(ctx, i.ty);
            check(ctx, i.lhs, tyv);
            check(ctx, i.rhs, tyv);
            return vmk(VType{former_level(sp, "identity type", lvl)});
          },
          [&](const CJ& j) -> Val {
            auto [av, lvl] = check_is_type(ctx, j.ty);
            (void)lvl;
            Val a = av;
            std::vector<DomFn> doms{
                [a](const std::vector<Val>&) { return a; },
                [a](const std::vector<Val>&) { return a; },
                [a](const std::vector<Val>& vs) { return vmk(VId{a, vs[0], vs[1]}); },
            };
            auto [motive, mlvl] = check_motive(ctx, j.motive, doms, "the J motive");
            (void)mlvl;
            check(ctx, j.diag, j_diag_type(g, a, motive));
            check(ctx, j.lhs, a);
            check(ctx, j.rhs, a);
            Val lv = eval(g, ctx.env, j.lhs);
            Val rv = eval(g, ctx.env, j.rhs);
            check(ctx, j.eq, vmk(VId{a, lv, rv}));
            Val cxy = do_app(g, do_app(g, motive, lv), rv);
            return do_app(g, cxy, eval(g, ctx.env, j.eq));
          },
          [&](const CUnit&) -> Val { return vmk(VType{0}); },
          [&](const CTt&) -> Val { return vmk(VUnit{}); },
          [&](const CNat&) -> Val { return vmk(VType{0}); },
          [&](const CZero&) -> Val { return vmk(VNat{}); },
          [&](const CSucc& s) -> Val {
            check(ctx, s.arg, vmk(VNat{}));
            return vmk(VNat{});
          },
          [&](const CNatRec& n) -> Val {
            std::vector<DomFn> doms{[](const std::vector<Val>&) { return vmk(VNat{}); }};
            auto [motive, mlvl] = check_motive(ctx, n.motive, doms, "the natrec motive");
            (void)mlvl;
            check(ctx, n.zcase, do_app(g, motive, vmk(VZero{})));
            check(ctx, n.scase, natrec_scase_type(g, motive));
            check(ctx, n.scrut, vmk(VNat{}));
            return do_app(g, motive, eval(g, ctx.env, n.scrut));
          },
          [&](const CType& u) -> Val {
            if (u.level >= 4)
              throw CheckError(sp, "universe level mismatch: Type 3 has no enclosing universe");
            return vmk(VType{u.level + 1});
          },
          [&](const CLet& l) -> Val {
            auto [tyv, lvl] = check_is_type(ctx, l.ann);
            (void)lvl;
            check(ctx, l.val, tyv);
            Context inner = ctx.define(l.hint, tyv, eval(g, ctx.env, l.val));
            return infer(inner, l.body);
          },
          [&](const CAnn& a) -> Val {
            auto [tyv, lvl] = check_is_type(ctx, a.ty);
            (void)lvl;
            check(ctx, a.tm, tyv);
            return tyv;
          },
      },
      t->data);
}

void check(const Context& ctx, const CPtr& t, const Val& ty) {
  const Globals& g = *ctx.globals;
  const Val& tyf = force(ty);
  if (const auto* lam = std::get_if<CLam>(&t->data)) {
    const auto* pi = std::get_if<VPi>(&tyf->v);
    if (!pi)
      throw CheckError(t->span, "function literal checked against non-function type " +
                                    show_type(ctx, ty));
    Val x = fresh_var(ctx.depth(), pi->dom, lam->hint);
    Context inner = ctx.define(lam->hint, pi->dom, x);
    check(inner, lam->body, pi->cod.apply(x));
    return;
  }
  if (const auto* pair = std::get_if<CPair>(&t->data)) {
    const auto* sg = std::get_if<VSigma>(&tyf->v);
    if (!sg)
      throw CheckError(t->span,
                       "pair checked against non-pair type " + show_type(ctx, ty));
    check(ctx, pair->fst, sg->fst);
    Val fv = eval(g, ctx.env, pair->fst);
    check(ctx, pair->snd, sg->snd.apply(std::move(fv)));
    return;
  }
  if (std::get_if<CRefl>(&t->data)) {
    const auto* id = std::get_if<VId>(&tyf->v);
    if (!id)
      throw CheckError(t->span,
                       "refl checked against non-identity type " + show_type(ctx, ty));
    if (!convertible(ctx, id->lhs, id->rhs, id->ty))
      throw CheckError(t->span, "refl endpoints not convertible: " +
                                    show_value(ctx, id->ty, id->lhs) + " vs " +
                                    show_value(ctx, id->ty, id->rhs) + " at " +
                                    show_type(ctx, id->ty));
    return;
  }
  if (const auto* let = std::get_if<CLet>(&t->data)) {
    auto [tyv, lvl] = check_is_type(ctx, let->ann);
    (void)lvl;
    check(ctx, let->val, tyv);
    Context inner = ctx.define(let->hint, tyv, eval(g, ctx.env, let->val));
    check(inner, let->body, ty);
    return;
  }
  Val ity = infer(ctx, t);
  if (!convertible_types(ctx, ity, ty))
    throw CheckError(t->span, "type mismatch: expected " + show_type(ctx, ty) + ", found " +
                                  show_type(ctx, ity));
}

} // namespace rgl
