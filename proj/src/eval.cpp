#include "rgl/error.hpp"
#include "rgl/kernel.hpp"

namespace rgl {

namespace {
template <class... Fs> struct Overload : Fs... { using Fs::operator()...; };
template <class... Fs> Overload(Fs...) -> Overload<Fs...>;
} // namespace

// --- core term utilities ------------------------------------------------------

bool core_equal(const CPtr& a, const CPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->data.index() != b->data.index()) return false;
  const auto eq = core_equal;
  return std::visit(
      Overload{
          [&](const CVar& x) { return x.index == std::get<CVar>(b->data).index; },
          [&](const CConst& x) { return x.id == std::get<CConst>(b->data).id; },
          [&](const CPi& x) {
            const auto& y = std::get<CPi>(b->data);
            return eq(x.dom, y.dom) && eq(x.cod, y.cod);
          },
          [&](const CLam& x) { return eq(x.body, std::get<CLam>(b->data).body); },
          [&](const CApp& x) {
            const auto& y = std::get<CApp>(b->data);
            return eq(x.fn, y.fn) && eq(x.arg, y.arg);
          },
          [&](const CSigma& x) {
            const auto& y = std::get<CSigma>(b->data);
            return eq(x.fst, y.fst) && eq(x.snd, y.snd);
          },
          [&](const CPair& x) {
            const auto& y = std::get<CPair>(b->data);
            return eq(x.fst, y.fst) && eq(x.snd, y.snd);
          },
          [&](const CFst& x) { return eq(x.arg, std::get<CFst>(b->data).arg); },
          [&](const CSnd& x) { return eq(x.arg, std::get<CSnd>(b->data).arg); },
          [&](const CId& x) {
            const auto& y = std::get<CId>(b->data);
            return eq(x.ty, y.ty) && eq(x.lhs, y.lhs) && eq(x.rhs, y.rhs);
          },
          [&](const CRefl&) { return true; },
          [&](const CJ& x) {
            const auto& y = std::get<CJ>(b->data);
            return eq(x.ty, y.ty) && eq(x.motive, y.motive) && eq(x.diag, y.diag) &&
                   eq(x.lhs, y.lhs) && eq(x.rhs, y.rhs) && eq(x.eq, y.eq);
          },
          [&](const CUnit&) { return true; },
          [&](const CTt&) { return true; },
          [&](const CNat&) { return true; },
          [&](const CZero&) { return true; },
          [&](const CSucc& x) { return eq(x.arg, std::get<CSucc>(b->data).arg); },
          [&](const CNatRec& x) {
            const auto& y = std::get<CNatRec>(b->data);
            return eq(x.motive, y.motive) && eq(x.zcase, y.zcase) && eq(x.scase, y.scase) &&
                   eq(x.scrut, y.scrut);
          },
          [&](const CType& x) { return x.level == std::get<CType>(b->data).level; },
          [&](const CLet& x) {
            const auto& y = std::get<CLet>(b->data);
            return eq(x.ann, y.ann) && eq(x.val, y.val) && eq(x.body, y.body);
          },
          [&](const CAnn& x) {
            const auto& y = std::get<CAnn>(b->data);
            return eq(x.tm, y.tm) && eq(x.ty, y.ty);
          },
      },
      a->data);
}

bool well_scoped(const CPtr& t, int depth, int num_globals) {
  const auto rec = [&](const CPtr& s, int d) { return well_scoped(s, d, num_globals); };
  return std::visit(
      Overload{
          [&](const CVar& x) { return x.index >= 0 && x.index < depth; },
          [&](const CConst& x) { return x.id >= 0 && x.id < num_globals; },
          [&](const CPi& x) { return rec(x.dom, depth) && rec(x.cod, depth + 1); },
          [&](const CLam& x) { return rec(x.body, depth + 1); },
          [&](const CApp& x) { return rec(x.fn, depth) && rec(x.arg, depth); },
          [&](const CSigma& x) { return rec(x.fst, depth) && rec(x.snd, depth + 1); },
          [&](const CPair& x) { return rec(x.fst, depth) && rec(x.snd, depth); },
          [&](const CFst& x) { return rec(x.arg, depth); },
          [&](const CSnd& x) { return rec(x.arg, depth); },
          [&](const CId& x) { return rec(x.ty, depth) && rec(x.lhs, depth) && rec(x.rhs, depth); },
          [&](const CRefl&) { return true; },
          [&](const CJ& x) {
            return rec(x.ty, depth) && rec(x.motive, depth) && rec(x.diag, depth) &&
                   rec(x.lhs, depth) && rec(x.rhs, depth) && rec(x.eq, depth);
          },
          [&](const CUnit&) { return true; },
          [&](const CTt&) { return true; },
          [&](const CNat&) { return true; },
          [&](const CZero&) { return true; },
          [&](const CSucc& x) { return rec(x.arg, depth); },
          [&](const CNatRec& x) {
            return rec(x.motive, depth) && rec(x.zcase, depth) && rec(x.scase, depth) &&
                   rec(x.scrut, depth);
          },
          [&](const CType&) { return true; },
          [&](const CLet& x) {
            return rec(x.ann, depth) && rec(x.val, depth) && rec(x.body, depth + 1);
          },
          [&](const CAnn& x) { return rec(x.tm, depth) && rec(x.ty, depth); },
      },
      t->data);
}

// --- value infrastructure -----------------------------------------------------

LazyVal delay(std::function<Val()> f) {
  return std::make_shared<LazySlot>(LazySlot{std::move(f), std::nullopt});
}

Closure close(const Globals& g, std::string hint, Env env, CPtr body) {
  Closure c;
  c.hint = std::move(hint);
  c.impl = std::make_pair(std::move(env), std::move(body));
  c.g = &g;
  return c;
}

Closure close_fn(std::string hint, std::function<Val(Val)> f) {
  Closure c;
  c.hint = std::move(hint);
  c.impl = std::move(f);
  return c;
}

Val Closure::apply(Val arg) const {
  if (const auto* tc = std::get_if<std::pair<Env, CPtr>>(&impl))
    return eval(*g, env_push(tc->first, std::move(arg)), tc->second);
  return std::get<std::function<Val(Val)>>(impl)(std::move(arg));
}

const Val& force(const Val& v) {
  const Val* cur = &v;
  while (const auto* gl = std::get_if<VGlued>(&(*cur)->v)) cur = &gl->unfolded->force();
  return *cur;
}

int Globals::add(GlobalEntry e) {
  int id = static_cast<int>(entries.size());
  by_name.emplace(e.name, id);
  entries.push_back(std::move(e));
  return id;
}

Val fresh_var(int level, Val ty, std::string hint) {
  return vmk(VNeutral{NVar{level, std::move(ty), std::move(hint)}, {}});
}

Context Context::extend(const std::string& hint, Val ty) const {
  Context out = *this;
  out.env = env_push(out.env, fresh_var(depth(), ty, hint));
  out.names.push_back(hint);
  out.types.push_back(std::move(ty));
  return out;
}

Context Context::define(const std::string& hint, Val ty, Val v) const {
  Context out = *this;
  out.env = env_push(out.env, std::move(v));
  out.names.push_back(hint);
  out.types.push_back(std::move(ty));
  return out;
}

// --- eliminators ---------------------------------------------------------------

static std::vector<Elim> with(const std::vector<Elim>& spine, Elim e) {
  std::vector<Elim> out = spine;
  out.push_back(std::move(e));
  return out;
}

Val do_app(const Globals& g, const Val& fn, Val arg) {
  if (const auto* l = std::get_if<VLam>(&fn->v)) return l->body.apply(std::move(arg));
  if (const auto* n = std::get_if<VNeutral>(&fn->v))
    return vmk(VNeutral{n->head, with(n->spine, EApp{std::move(arg)})});
  if (const auto* gl = std::get_if<VGlued>(&fn->v)) {
    LazyVal u = gl->unfolded;
    const Globals* gp = &g;
    return vmk(VGlued{gl->id, with(gl->spine, EApp{arg}),
                      delay([gp, u, arg] { return do_app(*gp, u->force(), arg); })});
  }
  throw KernelBug("application head is not a function value");
}

Val do_fst(const Globals& g, const Val& v) {
  if (const auto* p = std::get_if<VPair>(&v->v)) return p->fst;
  if (const auto* n = std::get_if<VNeutral>(&v->v))
    return vmk(VNeutral{n->head, with(n->spine, EFst{})});
  if (const auto* gl = std::get_if<VGlued>(&v->v)) {
    LazyVal u = gl->unfolded;
    const Globals* gp = &g;
    return vmk(VGlued{gl->id, with(gl->spine, EFst{}),
                      delay([gp, u] { return do_fst(*gp, u->force()); })});
  }
  throw KernelBug("projection head is not a pair value");
}

Val do_snd(const Globals& g, const Val& v) {
  if (const auto* p = std::get_if<VPair>(&v->v)) return p->snd;
  if (const auto* n = std::get_if<VNeutral>(&v->v))
    return vmk(VNeutral{n->head, with(n->spine, ESnd{})});
  if (const auto* gl = std::get_if<VGlued>(&v->v)) {
    LazyVal u = gl->unfolded;
    const Globals* gp = &g;
    return vmk(VGlued{gl->id, with(gl->spine, ESnd{}),
                      delay([gp, u] { return do_snd(*gp, u->force()); })});
  }
  throw KernelBug("projection head is not a pair value");
}

Val do_natrec(const Globals& g, Val motive, Val zcase, Val scase, const Val& scrut) {
  if (std::get_if<VZero>(&scrut->v)) return zcase;
  if (const auto* s = std::get_if<VSucc>(&scrut->v)) {
    Val prev = do_natrec(g, motive, zcase, scase, s->pred);
    return do_app(g, do_app(g, scase, s->pred), std::move(prev));
  }
  if (const auto* n = std::get_if<VNeutral>(&scrut->v))
    return vmk(VNeutral{n->head, with(n->spine, ENatRec{std::move(motive), std::move(zcase),
                                                        std::move(scase)})});
  if (const auto* gl = std::get_if<VGlued>(&scrut->v)) {
    LazyVal u = gl->unfolded;
    const Globals* gp = &g;
    return vmk(VGlued{
        gl->id, with(gl->spine, ENatRec{motive, zcase, scase}),
        delay([gp, u, motive, zcase, scase] {
          return do_natrec(*gp, motive, zcase, scase, u->force());
        })});
  }
  throw KernelBug("natrec scrutinee is not a numeral value");
}

Val do_j(const Globals& g, Val ty, Val motive, Val diag, Val lhs, Val rhs, const Val& eq) {
  if (std::get_if<VRefl>(&eq->v)) return do_app(g, diag, lhs);
  if (const auto* n = std::get_if<VNeutral>(&eq->v))
    return vmk(VNeutral{n->head, with(n->spine, EJ{std::move(ty), std::move(motive),
                                                   std::move(diag), std::move(lhs),
                                                   std::move(rhs)})});
  if (const auto* gl = std::get_if<VGlued>(&eq->v)) {
    LazyVal u = gl->unfolded;
    const Globals* gp = &g;
    return vmk(VGlued{gl->id, with(gl->spine, EJ{ty, motive, diag, lhs, rhs}),
                      delay([gp, u, ty, motive, diag, lhs, rhs] {
                        return do_j(*gp, ty, motive, diag, lhs, rhs, u->force());
                      })});
  }
  throw KernelBug("identity eliminator scrutinee is not an identification value");
}

// --- evaluation -----------------------------------------------------------------

Val eval(const Globals& g, const Env& env, const CPtr& t) {
  return std::visit(
      Overload{
          [&](const CVar& x) -> Val { return env_get(env, x.index); },
          [&](const CConst& x) -> Val { return g.entries[x.id].value; },
          [&](const CPi& x) -> Val {
            return vmk(VPi{eval(g, env, x.dom), close(g, x.hint, env, x.cod)});
          },
          [&](const CLam& x) -> Val { return vmk(VLam{close(g, x.hint, env, x.body)}); },
          [&](const CApp& x) -> Val {
            return do_app(g, eval(g, env, x.fn), eval(g, env, x.arg));
          },
          [&](const CSigma& x) -> Val {
            return vmk(VSigma{eval(g, env, x.fst), close(g, x.hint, env, x.snd)});
          },
          [&](const CPair& x) -> Val {
            return vmk(VPair{eval(g, env, x.fst), eval(g, env, x.snd)});
          },
          [&](const CFst& x) -> Val { return do_fst(g, eval(g, env, x.arg)); },
          [&](const CSnd& x) -> Val { return do_snd(g, eval(g, env, x.arg)); },
          [&](const CId& x) -> Val {
            return vmk(VId{eval(g, env, x.ty), eval(g, env, x.lhs), eval(g, env, x.rhs)});
          },
          [&](const CRefl&) -> Val { return vmk(VRefl{}); },
          [&](const CJ& x) -> Val {
            return do_j(g, eval(g, env, x.ty), eval(g, env, x.motive), eval(g, env, x.diag),
                        eval(g, env, x.lhs), eval(g, env, x.rhs), eval(g, env, x.eq));
          },
          [&](const CUnit&) -> Val { return vmk(VUnit{}); },
          [&](const CTt&) -> Val { return vmk(VTt{}); },
          [&](const CNat&) -> Val { return vmk(VNat{}); },
          [&](const CZero&) -> Val { return vmk(VZero{}); },
          [&](const CSucc& x) -> Val { return vmk(VSucc{eval(g, env, x.arg)}); },
          [&](const CNatRec& x) -> Val {
            return do_natrec(g, eval(g, env, x.motive), eval(g, env, x.zcase),
                             eval(g, env, x.scase), eval(g, env, x.scrut));
          },
          [&](const CType& x) -> Val { return vmk(VType{x.level}); },
          [&](const CLet& x) -> Val {
            return eval(g, env_push(env, eval(g, env, x.val)), x.body);
          },
          [&](const CAnn& x) -> Val { return eval(g, env, x.tm); },
      },
      t->data);
}

// --- fabricated classifier types (drive η-expansion of spine arguments) ---------

Val nat_motive_type() {
  return vmk(VPi{vmk(VNat{}), close_fn("n", [](Val) { return vmk(VType{4}); })});
}

Val natrec_scase_type(const Globals& g, Val motive) {
  const Globals* gp = &g;
  return vmk(VPi{vmk(VNat{}), close_fn("k", [gp, motive](Val k) {
                   Val here = do_app(*gp, motive, k);
                   Val next = do_app(*gp, motive, vmk(VSucc{k}));
                   return vmk(VPi{std::move(here),
                                  close_fn("_", [next](Val) { return next; })});
                 })});
}

Val j_motive_type(const Globals&, Val ty) {
  return vmk(VPi{ty, close_fn("x", [ty](Val x) {
                   return vmk(VPi{ty, close_fn("y", [ty, x](Val y) {
                                    Val idty = vmk(VId{ty, x, y});
                                    return vmk(VPi{std::move(idty), close_fn("p", [](Val) {
                                                     return vmk(VType{4});
                                                   })});
                                  })});
                 })});
}

Val j_diag_type(const Globals& g, Val ty, Val motive) {
  const Globals* gp = &g;
  return vmk(VPi{ty, close_fn("x", [gp, motive](Val x) {
                   Val cxx = do_app(*gp, do_app(*gp, motive, x), x);
                   return do_app(*gp, cxx, vmk(VRefl{}));
                 })});
}

// --- quotation -------------------------------------------------------------------

static CPtr quote_type(const Globals& g, int depth, const Val& v, bool unfold);
static CPtr quote_spine(const Globals& g, int depth, CPtr head, Val head_ty, Val partial,
                        const std::vector<Elim>& spine, bool unfold);

static Span no_span() { return Span{0, 0}; }

static CPtr quote_neutral(const Globals& g, int depth, const VNeutral& n, bool unfold) {
  CPtr head;
  Val head_ty;
  if (const auto* var = std::get_if<NVar>(&n.head)) {
    head = cmk(CVar{depth - 1 - var->level, var->hint}, no_span());
    head_ty = var->type;
  } else {
    int id = std::get<NPost>(n.head).id;
    head = cmk(CConst{id}, no_span());
    head_ty = g.entries[id].type;
  }
  Val partial = vmk(VNeutral{n.head, {}});
  return quote_spine(g, depth, std::move(head), std::move(head_ty), std::move(partial), n.spine,
                     unfold);
}

static CPtr quote_glued(const Globals& g, int depth, const VGlued& gl, bool unfold) {
  CPtr head = cmk(CConst{gl.id}, no_span());
  Val head_ty = g.entries[gl.id].type;
  Val partial = g.entries[gl.id].value;
  return quote_spine(g, depth, std::move(head), std::move(head_ty), std::move(partial), gl.spine,
                     unfold);
}

static CPtr quote_spine(const Globals& g, int depth, CPtr head, Val head_ty, Val partial,
                        const std::vector<Elim>& spine, bool unfold) {
  CPtr term = std::move(head);
  Val ty = std::move(head_ty);
  for (const Elim& e : spine) {
    if (const auto* app = std::get_if<EApp>(&e)) {
      const auto* pi = std::get_if<VPi>(&force(ty)->v);
      if (!pi) throw KernelBug("spine application against a non-function type");
      term = cmk(CApp{term, quote(g, depth, pi->dom, app->arg, unfold)}, no_span());
      ty = pi->cod.apply(app->arg);
      partial = do_app(g, partial, app->arg);
    } else if (std::get_if<EFst>(&e)) {
      const auto* sg = std::get_if<VSigma>(&force(ty)->v);
      if (!sg) throw KernelBug("spine projection against a non-pair type");
      term = cmk(CFst{term}, no_span());
      ty = sg->fst;
      partial = do_fst(g, partial);
    } else if (std::get_if<ESnd>(&e)) {
      const auto* sg = std::get_if<VSigma>(&force(ty)->v);
      if (!sg) throw KernelBug("spine projection against a non-pair type");
      term = cmk(CSnd{term}, no_span());
      ty = sg->snd.apply(do_fst(g, partial));
      partial = do_snd(g, partial);
    } else if (const auto* nr = std::get_if<ENatRec>(&e)) {
      CPtr qc = quote(g, depth, nat_motive_type(), nr->motive, unfold);
      CPtr qz = quote(g, depth, do_app(g, nr->motive, vmk(VZero{})), nr->zcase, unfold);
      CPtr qs = quote(g, depth, natrec_scase_type(g, nr->motive), nr->scase, unfold);
      term = cmk(CNatRec{std::move(qc), std::move(qz), std::move(qs), term}, no_span());
      ty = do_app(g, nr->motive, partial);
      partial = do_natrec(g, nr->motive, nr->zcase, nr->scase, partial);
    } else {
      const auto& j = std::get<EJ>(e);
      CPtr qa = quote_type(g, depth, j.ty, unfold);
      CPtr qc = quote(g, depth, j_motive_type(g, j.ty), j.motive, unfold);
      CPtr qd = quote(g, depth, j_diag_type(g, j.ty, j.motive), j.diag, unfold);
      CPtr ql = quote(g, depth, j.ty, j.lhs, unfold);
      CPtr qr = quote(g, depth, j.ty, j.rhs, unfold);
      term = cmk(CJ{std::move(qa), std::move(qc), std::move(qd), std::move(ql), std::move(qr),
                    term},
                 no_span());
      Val cxy = do_app(g, do_app(g, j.motive, j.lhs), j.rhs);
      ty = do_app(g, cxy, partial);
      partial = do_j(g, j.ty, j.motive, j.diag, j.lhs, j.rhs, partial);
    }
  }
  return term;
}

static CPtr quote_type(const Globals& g, int depth, const Val& v, bool unfold) {
  if (!unfold) {
    if (const auto* gl = std::get_if<VGlued>(&v->v)) return quote_glued(g, depth, *gl, false);
  }
  const Val& w = force(v);
  return std::visit(
      Overload{
          [&](const VPi& p) -> CPtr {
            Val x = fresh_var(depth, p.dom, p.cod.hint);
            return cmk(CPi{p.cod.hint, quote_type(g, depth, p.dom, unfold),
                           quote_type(g, depth + 1, p.cod.apply(x), unfold)},
                       no_span());
          },
          [&](const VSigma& s) -> CPtr {
            Val x = fresh_var(depth, s.fst, s.snd.hint);
            return cmk(CSigma{s.snd.hint, quote_type(g, depth, s.fst, unfold),
                              quote_type(g, depth + 1, s.snd.apply(x), unfold)},
                       no_span());
          },
          [&](const VId& i) -> CPtr {
            return cmk(CId{quote_type(g, depth, i.ty, unfold),
                           quote(g, depth, i.ty, i.lhs, unfold),
                           quote(g, depth, i.ty, i.rhs, unfold)},
                       no_span());
          },
          [&](const VNat&) -> CPtr { return cmk(CNat{}, no_span()); },
          [&](const VUnit&) -> CPtr { return cmk(CUnit{}, no_span()); },
          [&](const VType& t) -> CPtr { return cmk(CType{t.level}, no_span()); },
          [&](const VNeutral& n) -> CPtr { return quote_neutral(g, depth, n, unfold); },
          [&](const auto&) -> CPtr { throw KernelBug("quoting a non-type as a type"); },
      },
      w->v);
}

CPtr quote(const Globals& g, int depth, const Val& ty, const Val& v, bool unfold) {
  const Val& t = force(ty);
  if (const auto* pi = std::get_if<VPi>(&t->v)) {
    // Prefer the function's own binder name; the η-expansion of a neutral
    // falls back to the Π binder, or "x" when that is just arrow sugar.
    std::string hint = pi->cod.hint;
    if (const auto* lam = std::get_if<VLam>(&force(v)->v)) hint = lam->body.hint;
    if (hint.empty() || hint == "_") hint = "x";
    Val x = fresh_var(depth, pi->dom, hint);
    CPtr body = quote(g, depth + 1, pi->cod.apply(x), do_app(g, v, x), unfold);
    return cmk(CLam{hint, std::move(body)}, no_span());
  }
  if (const auto* sg = std::get_if<VSigma>(&t->v)) {
    Val f = do_fst(g, v);
    CPtr qf = quote(g, depth, sg->fst, f, unfold);
    CPtr qs = quote(g, depth, sg->snd.apply(f), do_snd(g, v), unfold);
    return cmk(CPair{std::move(qf), std::move(qs)}, no_span());
  }
  if (std::get_if<VUnit>(&t->v)) return cmk(CTt{}, no_span());
  if (std::get_if<VType>(&t->v)) return quote_type(g, depth, v, unfold);

  // Base data types and stuck types: the value's own shape decides.
  if (!unfold) {
    if (const auto* gl = std::get_if<VGlued>(&v->v)) return quote_glued(g, depth, *gl, false);
  }
  const Val& w = force(v);
  return std::visit(
      Overload{
          [&](const VZero&) -> CPtr { return cmk(CZero{}, no_span()); },
          [&](const VSucc& s) -> CPtr {
            return cmk(CSucc{quote(g, depth, vmk(VNat{}), s.pred, unfold)}, no_span());
          },
          [&](const VRefl&) -> CPtr { return cmk(CRefl{}, no_span()); },
          [&](const VTt&) -> CPtr { return cmk(CTt{}, no_span()); },
          [&](const VNeutral& n) -> CPtr { return quote_neutral(g, depth, n, unfold); },
          [&](const auto&) -> CPtr {
            throw KernelBug("value does not inhabit its classifier");
          },
      },
      w->v);
}

CPtr normalize(const Context& ctx, const CPtr& t, const Val& ty) {
  Val v = eval(*ctx.globals, ctx.env, t);
  return quote(*ctx.globals, ctx.depth(), ty, v, true);
}

} // namespace rgl
