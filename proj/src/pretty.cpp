#include <sstream>

#include "rgl/pretty.hpp"

namespace rgl {

namespace {

template <class... Fs> struct Overload : Fs... { using Fs::operator()...; };
template <class... Fs> Overload(Fs...) -> Overload<Fs...>;

constexpr int PREC_TERM = 0; // binders, arrows, let
constexpr int PREC_APP = 1;  // application and saturated forms
constexpr int PREC_ATOM = 2;

int prec_of(const STermData& d) {
  return std::visit(
      Overload{
          [](const SVar&) { return PREC_ATOM; },
          [](const SRefl&) { return PREC_ATOM; },
          [](const STt&) { return PREC_ATOM; },
          [](const SUnit&) { return PREC_ATOM; },
          [](const SNat&) { return PREC_ATOM; },
          [](const SZero&) { return PREC_ATOM; },
          [](const SPair&) { return PREC_ATOM; },
          [](const SAnn&) { return PREC_ATOM; },
          [](const SApp&) { return PREC_APP; },
          [](const SFst&) { return PREC_APP; },
          [](const SSnd&) { return PREC_APP; },
          [](const SId&) { return PREC_APP; },
          [](const SJ&) { return PREC_APP; },
          [](const SSucc&) { return PREC_APP; },
          [](const SNatRec&) { return PREC_APP; },
          [](const SType&) { return PREC_APP; },
          [](const auto&) { return PREC_TERM; },
      },
      d);
}

void print(std::ostream& os, const SPtr& t, int prec);

void print_atom(std::ostream& os, const SPtr& t) { print(os, t, PREC_ATOM); }

void print(std::ostream& os, const SPtr& t, int prec) {
  bool parens = prec_of(t->data) < prec;
  if (parens) os << '(';
  std::visit(
      Overload{
          [&](const SVar& v) { os << v.name; },
          [&](const SRefl&) { os << "refl"; },
          [&](const STt&) { os << "tt"; },
          [&](const SUnit&) { os << "Unit"; },
          [&](const SNat&) { os << "Nat"; },
          [&](const SZero&) { os << "zero"; },
          [&](const SType& u) { os << "Type " << u.level; },
          [&](const SLam&) {
            os << "λ";
            const SPtr* cur = &t;
            while (const auto* l = std::get_if<SLam>(&(*cur)->data)) {
              os << ' ' << l->binder;
              cur = &l->body;
            }
            os << " . ";
            print(os, *cur, PREC_TERM);
          },
          [&](const SPi& p) {
            if (p.binder == "_") {
              print(os, p.dom, PREC_APP);
              os << " -> ";
              print(os, p.cod, PREC_TERM);
              return;
            }
            os << "Π";
            const SPtr* cur = &t;
            while (true) {
              const auto* q = std::get_if<SPi>(&(*cur)->data);
              if (!q || q->binder == "_") break;
              os << " (" << q->binder << " : ";
              print(os, q->dom, PREC_TERM);
              os << ")";
              cur = &q->cod;
            }
            os << " . ";
            print(os, *cur, PREC_TERM);
          },
          [&](const SSigma&) {
            os << "Σ";
            const SPtr* cur = &t;
            while (const auto* q = std::get_if<SSigma>(&(*cur)->data)) {
              os << " (" << q->binder << " : ";
              print(os, q->fst, PREC_TERM);
              os << ")";
              cur = &q->snd;
            }
            os << " . ";
            print(os, *cur, PREC_TERM);
          },
          [&](const SLet& l) {
            os << "let " << l.binder << " : ";
            print(os, l.ann, PREC_TERM);
            os << " := ";
            print(os, l.val, PREC_TERM);
            os << " in ";
            print(os, l.body, PREC_TERM);
          },
          [&](const SApp& a) {
            print(os, a.fn, PREC_APP);
            os << ' ';
            print_atom(os, a.arg);
          },
          [&](const SPair&) {
            os << '(';
            const SPtr* cur = &t;
            bool first = true;
            while (const auto* p = std::get_if<SPair>(&(*cur)->data)) {
              if (!first) os << ", ";
              first = false;
              print(os, p->fst, PREC_TERM);
              cur = &p->snd;
            }
            os << ", ";
            print(os, *cur, PREC_TERM);
            os << ')';
          },
          [&](const SAnn& a) {
            os << '(';
            print(os, a.tm, PREC_TERM);
            os << " : ";
            print(os, a.ty, PREC_TERM);
            os << ')';
          },
          [&](const SFst& f) { os << "fst "; print_atom(os, f.arg); },
          [&](const SSnd& s) { os << "snd "; print_atom(os, s.arg); },
          [&](const SSucc& s) { os << "succ "; print_atom(os, s.arg); },
          [&](const SId& i) {
            os << "Id ";
            print_atom(os, i.ty);
            os << ' ';
            print_atom(os, i.lhs);
            os << ' ';
            print_atom(os, i.rhs);
          },
          [&](const SJ& j) {
            os << "J ";
            print_atom(os, j.ty);
            os << ' ';
            print_atom(os, j.motive);
            os << ' ';
            print_atom(os, j.diag);
            os << ' ';
            print_atom(os, j.lhs);
            os << ' ';
            print_atom(os, j.rhs);
            os << ' ';
            print_atom(os, j.eq);
          },
          [&](const SNatRec& n) {
            os << "natrec ";
            print_atom(os, n.motive);
            os << ' ';
            print_atom(os, n.zcase);
            os << ' ';
            print_atom(os, n.scase);
            os << ' ';
            print_atom(os, n.scrut);
          },
      },
      t->data);
  if (parens) os << ')';
}

} // namespace

std::string pretty(const SPtr& t) {
  std::ostringstream os;
  print(os, t, PREC_TERM);
  return os.str();
}

std::string pretty(const Declaration& d) {
  std::ostringstream os;
  switch (d.kind) {
    case DeclKind::Def:
      os << "def " << d.name << " : ";
      print(os, d.type, PREC_TERM);
      os << " := ";
      print(os, d.lhs, PREC_TERM);
      break;
    case DeclKind::Postulate:
      os << "postulate " << d.name << " : ";
      print(os, d.type, PREC_TERM);
      break;
    case DeclKind::Eq:
    case DeclKind::FailEq:
      os << (d.kind == DeclKind::Eq ? "#eq " : "#fail-eq ");
      print(os, d.lhs, PREC_ATOM);
      os << ' ';
      print(os, d.rhs, PREC_ATOM);
      os << " : ";
      print(os, d.type, PREC_TERM);
      break;
    case DeclKind::Norm:
      os << "#norm ";
      print(os, d.lhs, PREC_TERM);
      os << " : ";
      print(os, d.type, PREC_TERM);
      break;
  }
  return os.str();
}

bool alpha_equal_syntax(const SPtr& a, const SPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->data.index() != b->data.index()) return false;
  const auto eq = alpha_equal_syntax;
  return std::visit(
      Overload{
          [&](const SVar& x) { return x.name == std::get<SVar>(b->data).name; },
          [&](const SPi& x) {
            const auto& y = std::get<SPi>(b->data);
            return x.binder == y.binder && eq(x.dom, y.dom) && eq(x.cod, y.cod);
          },
          [&](const SLam& x) {
            const auto& y = std::get<SLam>(b->data);
            return x.binder == y.binder && eq(x.body, y.body);
          },
          [&](const SApp& x) {
            const auto& y = std::get<SApp>(b->data);
            return eq(x.fn, y.fn) && eq(x.arg, y.arg);
          },
          [&](const SSigma& x) {
            const auto& y = std::get<SSigma>(b->data);
            return x.binder == y.binder && eq(x.fst, y.fst) && eq(x.snd, y.snd);
          },
          [&](const SPair& x) {
            const auto& y = std::get<SPair>(b->data);
            return eq(x.fst, y.fst) && eq(x.snd, y.snd);
          },
          [&](const SFst& x) { return eq(x.arg, std::get<SFst>(b->data).arg); },
          [&](const SSnd& x) { return eq(x.arg, std::get<SSnd>(b->data).arg); },
          [&](const SId& x) {
            const auto& y = std::get<SId>(b->data);
            return eq(x.ty, y.ty) && eq(x.lhs, y.lhs) && eq(x.rhs, y.rhs);
          },
          [&](const SRefl&) { return true; },
          [&](const SJ& x) {
            const auto& y = std::get<SJ>(b->data);
            return eq(x.ty, y.ty) && eq(x.motive, y.motive) && eq(x.diag, y.diag) &&
                   eq(x.lhs, y.lhs) && eq(x.rhs, y.rhs) && eq(x.eq, y.eq);
          },
          [&](const SUnit&) { return true; },
          [&](const STt&) { return true; },
          [&](const SNat&) { return true; },
          [&](const SZero&) { return true; },
          [&](const SSucc& x) { return eq(x.arg, std::get<SSucc>(b->data).arg); },
          [&](const SNatRec& x) {
            const auto& y = std::get<SNatRec>(b->data);
            return eq(x.motive, y.motive) && eq(x.zcase, y.zcase) && eq(x.scase, y.scase) &&
                   eq(x.scrut, y.scrut);
          },
          [&](const SType& x) { return x.level == std::get<SType>(b->data).level; },
          [&](const SLet& x) {
            const auto& y = std::get<SLet>(b->data);
            return x.binder == y.binder && eq(x.ann, y.ann) && eq(x.val, y.val) &&
                   eq(x.body, y.body);
          },
          [&](const SAnn& x) {
            const auto& y = std::get<SAnn>(b->data);
            return eq(x.tm, y.tm) && eq(x.ty, y.ty);
          },
      },
      a->data);
}

bool decl_equal_syntax(const Declaration& a, const Declaration& b) {
  auto both = [](const SPtr& x, const SPtr& y) {
    if (!x && !y) return true;
    if (!x || !y) return false;
    return alpha_equal_syntax(x, y);
  };
  return a.kind == b.kind && a.name == b.name && both(a.lhs, b.lhs) && both(a.rhs, b.rhs) &&
         both(a.type, b.type);
}

} // namespace rgl
