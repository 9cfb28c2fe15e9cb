#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rgl/report.hpp"

// Finite-set semantics for reflexive graphs, displayed graphs and lenses.
// Types are finite sets, identity types are equality (a singleton or empty
// set of proofs), and equivalences are bijections. Every structure the
// checker's library treats axiomatically is computed here by brute force.
namespace rgl::fin {

// ---------------------------------------------------------------------------
// Data

// A finite reflexive multigraph: vertices 0..n-1, e[x][y] parallel edges from
// x to y (labelled 0..e[x][y]-1), and a chosen self-loop rx[x] < e[x][x].
struct FinRxGraph {
  int n = 0;
  std::vector<std::vector<int>> e;
  std::vector<int> rx;

  bool operator==(const FinRxGraph&) const = default;
};

void validate(const FinRxGraph& g);  // throws std::invalid_argument
std::string serialize(const FinRxGraph& g);

// Displayed over `base`: a fiber set per vertex (fib[x] elements), a count of
// displayed edges per (base edge p : x -> y, u in fib[x], v in fib[y]), and a
// chosen displayed self-loop drx[x][u] < dedge[x][x][rx[x]][u][u].
struct FinDispRxGraph {
  FinRxGraph base;
  std::vector<int> fib;
  // dedge[x][y][p][u][v]
  std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> dedge;
  std::vector<std::vector<int>> drx;  // drx[x][u]

  bool operator==(const FinDispRxGraph&) const = default;
};

void validate(const FinDispRxGraph& d);
std::string serialize(const FinDispRxGraph& d);

enum class Variance { OplaxCovariant, LaxContravariant, Unbiased };
std::string to_string(Variance v);

// A lens over `base`. Biased lenses carry one component graph per vertex and
// one transport map per base edge; unbiased lenses carry a component graph
// per base edge (the component at a vertex x is fam_edge[x][x][rx[x]]) and
// extension maps from the two diagonal components into each edge component.
//
//   OplaxCovariant:   push[x][y][p] : fam[x].n -> fam[y].n
//                     push_rx[x][u] < fam[x].e[ push[x][x][rx[x]][u] ][u]
//   LaxContravariant: pull[x][y][p] : fam[y].n -> fam[x].n
//                     pull_rx[x][u] < fam[x].e[u][ pull[x][x][rx[x]][u] ]
//   Unbiased:         lext[x][y][p] : diag(x).n -> fam_edge[x][y][p].n
//                     rext[x][y][p] : diag(y).n -> fam_edge[x][y][p].n
//                     ext_rx[x][u]  < diag(x).e[ lext[x][x][rx][u] ][ rext[x][x][rx][u] ]
//                     rext_rx[x][u] < diag(x).e[u][ rext[x][x][rx][u] ]
struct FinLens {
  Variance variance = Variance::OplaxCovariant;
  FinRxGraph base;
  std::vector<FinRxGraph> fam;                                 // biased
  std::vector<std::vector<std::vector<FinRxGraph>>> fam_edge;  // unbiased

  std::vector<std::vector<std::vector<std::vector<int>>>> push;  // [x][y][p][u]
  std::vector<std::vector<int>> push_rx;                         // [x][u]
  std::vector<std::vector<std::vector<std::vector<int>>>> pull;  // [x][y][p][v]
  std::vector<std::vector<int>> pull_rx;

  std::vector<std::vector<std::vector<std::vector<int>>>> lext;
  std::vector<std::vector<std::vector<std::vector<int>>>> rext;
  std::vector<std::vector<int>> ext_rx;
  std::vector<std::vector<int>> rext_rx;

  bool operator==(const FinLens&) const = default;
};

void validate(const FinLens& l);
std::string serialize(const FinLens& l);

// Diagonal component of an unbiased lens at x.
const FinRxGraph& diag_component(const FinLens& l, int x);

// ---------------------------------------------------------------------------
// Univalence

// The five characterizations, each computed from scratch:
//   1. every fan  (y, d : x -> y) is a proposition (at most one element)
//   2. every cofan (y, d : y -> x) is a proposition
//   3. every fan is contractible with centre (x, rx[x])
//   4. every cofan is contractible with centre (x, rx[x])
//   5. idToEdge : Id(x,y) -> e(x,y) is a bijection for all x, y
struct UnivalenceProbe {
  bool fan_prop = false;
  bool cofan_prop = false;
  bool fan_contractible = false;
  bool cofan_contractible = false;
  bool id_to_edge_equiv = false;

  bool agree() const {
    return fan_prop == cofan_prop && fan_prop == fan_contractible &&
           fan_prop == cofan_contractible && fan_prop == id_to_edge_equiv;
  }
};

UnivalenceProbe univalence_probe(const FinRxGraph& g);

// Computes the probe and insists the five conditions agree (throws
// std::logic_error otherwise); returns their shared verdict.
bool is_univalent(const FinRxGraph& g);

FinRxGraph component(const FinDispRxGraph& d, int x);
bool is_univalent_displayed(const FinDispRxGraph& d);  // every component

// ---------------------------------------------------------------------------
// Constructions

FinRxGraph discrete(int n);
FinRxGraph codiscrete(int n);
FinRxGraph opposite(const FinRxGraph& g);
FinRxGraph total(const FinDispRxGraph& d);
FinRxGraph binary_product(const FinRxGraph& a, const FinRxGraph& b);
FinRxGraph product(const std::vector<FinRxGraph>& fam);
FinRxGraph coproduct(const std::vector<FinRxGraph>& fam);
FinRxGraph tensor(int k, const FinRxGraph& g);
FinRxGraph cotensor(int k, const FinRxGraph& g);
// keep[x] nonzero selects vertex x.
FinRxGraph comprehension(const FinRxGraph& g, const std::vector<int>& keep);

FinDispRxGraph constant_displayed(const FinRxGraph& base, const FinRxGraph& fiber);
FinDispRxGraph total_opposite(const FinDispRxGraph& d);
// C restricted to the component of B at x: c.base must equal total(b).
FinDispRxGraph restriction(const FinDispRxGraph& b, const FinDispRxGraph& c, int x);

FinDispRxGraph display(const FinLens& l);  // any variance
FinRxGraph flatten(const FinLens& l);      // biased variances only
// Partial product of c weighted by the (biased, definitional-on-the-nose not
// required) lens l; variance follows l.
FinRxGraph partial_product(const FinRxGraph& c, const FinLens& l);

FinLens upgrade(const FinLens& l);              // biased -> unbiased
FinLens lens_total_opposite(const FinLens& l);  // swaps variance, flips base

// Uniform dispatcher used by the suite runner. Shape mismatches throw
// std::invalid_argument with the kind name in the message.
struct Inputs {
  std::vector<FinRxGraph> graphs;
  std::vector<FinDispRxGraph> displayed;
  std::vector<FinLens> lenses;
  std::vector<int> numbers;
  std::vector<std::vector<int>> masks;
};
using Constructed = std::variant<FinRxGraph, FinDispRxGraph, FinLens>;
Constructed construct(const std::string& kind, const Inputs& in);
std::vector<std::string> construction_kinds();

// ---------------------------------------------------------------------------
// Fibrations

// Lift data per (x, y, p, u) for covariant probes (per (x, y, p, v) for
// contravariant ones): the centre of the lift set when it is a singleton.
struct FibrationWitness {
  std::vector<std::vector<std::vector<std::vector<int>>>> vertex;     // p_* u
  std::vector<std::vector<std::vector<std::vector<int>>>> edge;       // p_dag u
  std::vector<std::vector<std::vector<std::vector<bool>>>> singleton;
  bool complete = false;  // every lift set is a singleton
};

FibrationWitness probe_cov_fibration(const FinDispRxGraph& d);
FibrationWitness probe_ctrv_fibration(const FinDispRxGraph& d);
std::optional<FibrationWitness> is_cov_fibration(const FinDispRxGraph& d);
std::optional<FibrationWitness> is_ctrv_fibration(const FinDispRxGraph& d);

// The oplax covariant lens a covariant fibration carries: components,
// pushforwards from the witness centres, unitors by straightening drx.
FinLens underlying_lens(const FinDispRxGraph& d, const FibrationWitness& w);

// ---------------------------------------------------------------------------
// Enumeration

// All reflexive graphs with 1..max_vertices vertices and multiplicities at
// most max_mult, in canonical order: vertex count, then edge matrix read
// row-major, then rx choices, all lexicographic. Duplicate-free by
// construction; sizes match count_graphs.
std::vector<FinRxGraph> enumerate_graphs(int max_vertices, int max_mult);

// Closed-form count for exactly n vertices (independent oracle):
//   (sum_{c=1}^{K} c)^n * (K+1)^(n*(n-1))
std::uint64_t count_graphs(int n, int max_mult);

// Monotone bijections Fin(m) -> Fin(n) counted by brute force; the library's
// gauntness postulate says this is at most 1, and 0 unless m == n.
int count_monotone_bijections(int m, int n);

// ---------------------------------------------------------------------------
// Suites

struct SuiteOptions {
  int max_vertices = 3;
  int max_mult = 2;
  int max_fibers = 2;
  std::uint64_t seed = 0;
};

std::vector<std::string> suite_names();
// Throws std::invalid_argument("unknown suite name '...'").
Report run_suite(const std::string& name, const SuiteOptions& opt);
Report run_all_suites(const SuiteOptions& opt);

}  // namespace rgl::fin
