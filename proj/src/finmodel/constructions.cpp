#include <climits>
#include <stdexcept>
#include <string>

#include "rgl/finmodel.hpp"

namespace rgl::fin {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

// Constructed graphs live in dense matrices, so keep results desk-scale.
constexpr long long kMaxConstructedVertices = 4096;

int checked_count(long long v, const char* what) {
  if (v < 0 || v > INT_MAX) bad(std::string(what) + ": edge multiplicity overflow");
  return static_cast<int>(v);
}

int checked_vertices(long long v, const char* what) {
  if (v < 0 || v > kMaxConstructedVertices)
    bad(std::string(what) + ": result exceeds size limits");
  return static_cast<int>(v);
}

FinRxGraph blank_graph(int n) {
  FinRxGraph g;
  g.n = n;
  g.e.assign(n, std::vector<int>(n, 0));
  g.rx.assign(n, 0);
  return g;
}

std::vector<int> fiber_offsets(const FinDispRxGraph& d) {
  std::vector<int> off(d.base.n + 1, 0);
  for (int x = 0; x < d.base.n; ++x) off[x + 1] = off[x] + d.fib[x];
  return off;
}

// All tuples with digit t in 0..dims[t]-1, lexicographic, first digit most
// significant. The empty dimension list yields the single empty tuple.
std::vector<std::vector<int>> all_tuples(const std::vector<int>& dims, const char* what) {
  long long n = 1;
  for (int d : dims) {
    n *= d;
    if (n > kMaxConstructedVertices) bad(std::string(what) + ": result exceeds size limits");
    if (n == 0) return {};
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur(dims.size(), 0);
  out.push_back(cur);
  while (true) {
    int i = static_cast<int>(dims.size()) - 1;
    while (i >= 0 && cur[i] + 1 >= dims[i]) --i;
    if (i < 0) break;
    cur[i]++;
    for (std::size_t j = i + 1; j < cur.size(); ++j) cur[j] = 0;
    out.push_back(cur);
  }
  return out;
}

}  // namespace

FinRxGraph discrete(int n) {
  if (n < 0) bad("discrete: negative vertex count");
  FinRxGraph g = blank_graph(n);
  for (int x = 0; x < n; ++x) g.e[x][x] = 1;
  return g;
}

FinRxGraph codiscrete(int n) {
  if (n < 0) bad("codiscrete: negative vertex count");
  FinRxGraph g = blank_graph(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g.e[x][y] = 1;
  return g;
}

FinRxGraph opposite(const FinRxGraph& g) {
  FinRxGraph o = blank_graph(g.n);
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) o.e[x][y] = g.e[y][x];
  o.rx = g.rx;
  return o;
}

// Vertices are pairs (x, u in fib[x]) numbered by fiber offsets; an edge is a
// pair (base edge p, displayed edge q over p), flattened with p outermost.
FinRxGraph total(const FinDispRxGraph& d) {
  std::vector<int> off = fiber_offsets(d);
  FinRxGraph t = blank_graph(checked_vertices(off[d.base.n], "total"));
  for (int x = 0; x < d.base.n; ++x)
    for (int y = 0; y < d.base.n; ++y)
      for (int u = 0; u < d.fib[x]; ++u)
        for (int v = 0; v < d.fib[y]; ++v) {
          long long c = 0;
          for (int p = 0; p < d.base.e[x][y]; ++p) c += d.dedge[x][y][p][u][v];
          t.e[off[x] + u][off[y] + v] = checked_count(c, "total");
        }
  for (int x = 0; x < d.base.n; ++x)
    for (int u = 0; u < d.fib[x]; ++u) {
      long long r = 0;
      for (int p = 0; p < d.base.rx[x]; ++p) r += d.dedge[x][x][p][u][u];
      t.rx[off[x] + u] = checked_count(r + d.drx[x][u], "total");
    }
  return t;
}

// Vertices (i,j) numbered i*b.n+j; edge pairs (p,q) flattened p*|q-range|+q.
FinRxGraph binary_product(const FinRxGraph& a, const FinRxGraph& b) {
  FinRxGraph t = blank_graph(checked_vertices(static_cast<long long>(a.n) * b.n, "binary-product"));
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j)
      for (int i2 = 0; i2 < a.n; ++i2)
        for (int j2 = 0; j2 < b.n; ++j2)
          t.e[i * b.n + j][i2 * b.n + j2] =
              checked_count(static_cast<long long>(a.e[i][i2]) * b.e[j][j2], "binary-product");
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j)
      t.rx[i * b.n + j] =
          checked_count(static_cast<long long>(a.rx[i]) * b.e[j][j] + b.rx[j], "binary-product");
  return t;
}

// Vertices are tuples of member vertices; edges are tuples of member edges,
// both in mixed radix with the first member most significant.
FinRxGraph product(const std::vector<FinRxGraph>& fam) {
  const int k = static_cast<int>(fam.size());
  std::vector<int> dims(k);
  for (int t = 0; t < k; ++t) dims[t] = fam[t].n;
  std::vector<std::vector<int>> vs = all_tuples(dims, "product");
  FinRxGraph g = blank_graph(static_cast<int>(vs.size()));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = 0; b < vs.size(); ++b) {
      long long c = 1;
      for (int t = 0; t < k && c > 0; ++t) c *= fam[t].e[vs[a][t]][vs[b][t]];
      g.e[a][b] = checked_count(c, "product");
    }
  for (std::size_t a = 0; a < vs.size(); ++a) {
    long long r = 0;
    for (int t = 0; t < k; ++t) {
      int u = vs[a][t];
      r = r * fam[t].e[u][u] + fam[t].rx[u];
    }
    g.rx[a] = checked_count(r, "product");
  }
  return g;
}

FinRxGraph coproduct(const std::vector<FinRxGraph>& fam) {
  long long total_n = 0;
  for (const FinRxGraph& m : fam) total_n += m.n;
  FinRxGraph g = blank_graph(checked_vertices(total_n, "coproduct"));
  int off = 0;
  for (const FinRxGraph& m : fam) {
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) g.e[off + i][off + j] = m.e[i][j];
      g.rx[off + i] = m.rx[i];
    }
    off += m.n;
  }
  return g;
}

// k disjoint copies: edges join vertices with equal copy index only.
FinRxGraph tensor(int k, const FinRxGraph& g) {
  if (k < 0) bad("tensor: negative copy count");
  FinRxGraph t = blank_graph(checked_vertices(static_cast<long long>(k) * g.n, "tensor"));
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < g.n; ++i) {
      for (int j = 0; j < g.n; ++j) t.e[c * g.n + i][c * g.n + j] = g.e[i][j];
      t.rx[c * g.n + i] = g.rx[i];
    }
  return t;
}

// Vertices are k-tuples of g-vertices (functions from the indexing set);
// edges are pointwise edge tuples in mixed radix, first point most
// significant.
FinRxGraph cotensor(int k, const FinRxGraph& g) {
  if (k < 0) bad("cotensor: negative exponent");
  std::vector<std::vector<int>> vs = all_tuples(std::vector<int>(k, g.n), "cotensor");
  FinRxGraph t = blank_graph(static_cast<int>(vs.size()));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = 0; b < vs.size(); ++b) {
      long long c = 1;
      for (int i = 0; i < k && c > 0; ++i) c *= g.e[vs[a][i]][vs[b][i]];
      t.e[a][b] = checked_count(c, "cotensor");
    }
  for (std::size_t a = 0; a < vs.size(); ++a) {
    long long r = 0;
    for (int i = 0; i < k; ++i) {
      int u = vs[a][i];
      r = r * g.e[u][u] + g.rx[u];
    }
    t.rx[a] = checked_count(r, "cotensor");
  }
  return t;
}

FinRxGraph comprehension(const FinRxGraph& g, const std::vector<int>& keep) {
  if (static_cast<int>(keep.size()) != g.n) bad("comprehension: mask length mismatch");
  std::vector<int> kept;
  for (int x = 0; x < g.n; ++x)
    if (keep[x] != 0) kept.push_back(x);
  FinRxGraph t = blank_graph(static_cast<int>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = 0; j < kept.size(); ++j) t.e[i][j] = g.e[kept[i]][kept[j]];
    t.rx[i] = g.rx[kept[i]];
  }
  return t;
}

FinDispRxGraph constant_displayed(const FinRxGraph& base, const FinRxGraph& fiber) {
  FinDispRxGraph d;
  d.base = base;
  const int n = base.n;
  d.fib.assign(n, fiber.n);
  d.dedge.assign(n, {});
  for (int x = 0; x < n; ++x) {
    d.dedge[x].assign(n, {});
    for (int y = 0; y < n; ++y)
      d.dedge[x][y].assign(base.e[x][y], fiber.e);
  }
  d.drx.assign(n, fiber.rx);
  return d;
}

// Displayed edges over an opposite-base edge p : x -> y (a base edge y -> x)
// are the original displayed edges over p read backwards.
FinDispRxGraph total_opposite(const FinDispRxGraph& d) {
  FinDispRxGraph t;
  t.base = opposite(d.base);
  t.fib = d.fib;
  const int n = d.base.n;
  t.dedge.assign(n, {});
  for (int x = 0; x < n; ++x) {
    t.dedge[x].assign(n, {});
    for (int y = 0; y < n; ++y) {
      t.dedge[x][y].assign(t.base.e[x][y], {});
      for (int p = 0; p < t.base.e[x][y]; ++p) {
        t.dedge[x][y][p].assign(d.fib[x], std::vector<int>(d.fib[y], 0));
        for (int u = 0; u < d.fib[x]; ++u)
          for (int v = 0; v < d.fib[y]; ++v) t.dedge[x][y][p][u][v] = d.dedge[y][x][p][v][u];
      }
    }
  }
  t.drx = d.drx;
  return t;
}

// A component edge q : u -> v at x corresponds to the total edge (rx[x], q)
// from (x,u) to (x,v); restriction reads c through that embedding.
FinDispRxGraph restriction(const FinDispRxGraph& b, const FinDispRxGraph& c, int x) {
  if (x < 0 || x >= b.base.n) bad("restriction: vertex out of range");
  if (!(c.base == total(b)))
    bad("restriction: second graph is not displayed over the total of the first");
  std::vector<int> off = fiber_offsets(b);
  const int o = off[x];
  FinDispRxGraph r;
  r.base = component(b, x);
  const int m = r.base.n;  // == b.fib[x]
  r.fib.assign(m, 0);
  for (int u = 0; u < m; ++u) r.fib[u] = c.fib[o + u];
  r.dedge.assign(m, {});
  for (int u = 0; u < m; ++u) {
    r.dedge[u].assign(m, {});
    for (int v = 0; v < m; ++v) {
      r.dedge[u][v].assign(r.base.e[u][v], {});
      int flat0 = 0;
      for (int p = 0; p < b.base.rx[x]; ++p) flat0 += b.dedge[x][x][p][u][v];
      for (int q = 0; q < r.base.e[u][v]; ++q) r.dedge[u][v][q] = c.dedge[o + u][o + v][flat0 + q];
    }
  }
  r.drx.assign(m, {});
  for (int u = 0; u < m; ++u) r.drx[u] = c.drx[o + u];
  return r;
}

FinDispRxGraph display(const FinLens& l) {
  FinDispRxGraph d;
  d.base = l.base;
  const int n = l.base.n;
  d.fib.assign(n, 0);
  d.dedge.assign(n, {});
  for (int x = 0; x < n; ++x) {
    d.fib[x] = l.variance == Variance::Unbiased ? diag_component(l, x).n : l.fam[x].n;
    d.dedge[x].assign(n, {});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      d.dedge[x][y].assign(l.base.e[x][y], {});
      for (int p = 0; p < l.base.e[x][y]; ++p) {
        d.dedge[x][y][p].assign(d.fib[x], std::vector<int>(d.fib[y], 0));
        for (int u = 0; u < d.fib[x]; ++u)
          for (int v = 0; v < d.fib[y]; ++v) {
            switch (l.variance) {
              case Variance::OplaxCovariant:
                d.dedge[x][y][p][u][v] = l.fam[y].e[l.push[x][y][p][u]][v];
                break;
              case Variance::LaxContravariant:
                d.dedge[x][y][p][u][v] = l.fam[x].e[u][l.pull[x][y][p][v]];
                break;
              case Variance::Unbiased:
                d.dedge[x][y][p][u][v] =
                    l.fam_edge[x][y][p].e[l.lext[x][y][p][u]][l.rext[x][y][p][v]];
                break;
            }
          }
      }
    }
  switch (l.variance) {
    case Variance::OplaxCovariant: d.drx = l.push_rx; break;
    case Variance::LaxContravariant: d.drx = l.pull_rx; break;
    case Variance::Unbiased: d.drx = l.ext_rx; break;
  }
  return d;
}

FinRxGraph flatten(const FinLens& l) {
  if (l.variance == Variance::Unbiased) bad("flatten: unbiased lens");
  return total(display(l));
}

// Polynomial graph: vertices are pairs (x, f : fam[x] -> c); an edge over a
// base edge p is a tuple of c-edges f(u) -> g(push(p,u)) (covariantly) or
// f(pull(p,u)) -> g(u) (contravariantly), flattened with p outermost and the
// per-point labels in mixed radix. The lens's unit transport must be the
// identity so that pointwise reflexivity supplies the reflexivity datum; the
// unitor label itself is unconstrained.
FinRxGraph partial_product(const FinRxGraph& c, const FinLens& l) {
  if (l.variance == Variance::Unbiased) bad("partial-product: unbiased lens");
  const bool cov = l.variance == Variance::OplaxCovariant;
  const int n = l.base.n;
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < l.fam[x].n; ++u) {
      int unit = cov ? l.push[x][x][l.base.rx[x]][u] : l.pull[x][x][l.base.rx[x]][u];
      if (unit != u) bad("partial-product: lens unit map is not the identity");
    }

  std::vector<std::vector<std::vector<int>>> funcs(n);
  std::vector<int> off(n + 1, 0);
  for (int x = 0; x < n; ++x) {
    funcs[x] = all_tuples(std::vector<int>(l.fam[x].n, c.n), "partial-product");
    long long next = off[x] + static_cast<long long>(funcs[x].size());
    off[x + 1] = checked_vertices(next, "partial-product");
  }
  FinRxGraph t = blank_graph(off[n]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (std::size_t a = 0; a < funcs[x].size(); ++a)
        for (std::size_t b = 0; b < funcs[y].size(); ++b) {
          const std::vector<int>& cf = funcs[x][a];
          const std::vector<int>& df = funcs[y][b];
          long long count = 0;
          for (int p = 0; p < l.base.e[x][y]; ++p) {
            long long block = 1;
            if (cov) {
              for (int u = 0; u < l.fam[x].n && block > 0; ++u)
                block *= c.e[cf[u]][df[l.push[x][y][p][u]]];
            } else {
              for (int u = 0; u < l.fam[y].n && block > 0; ++u)
                block *= c.e[cf[l.pull[x][y][p][u]]][df[u]];
            }
            count += block;
          }
          t.e[off[x] + a][off[y] + b] = checked_count(count, "partial-product");
        }
  for (int x = 0; x < n; ++x)
    for (std::size_t a = 0; a < funcs[x].size(); ++a) {
      const std::vector<int>& cf = funcs[x][a];
      long long r = 0;
      for (int p = 0; p < l.base.rx[x]; ++p) {
        long long block = 1;
        if (cov) {
          for (int u = 0; u < l.fam[x].n && block > 0; ++u)
            block *= c.e[cf[u]][cf[l.push[x][x][p][u]]];
        } else {
          for (int u = 0; u < l.fam[x].n && block > 0; ++u)
            block *= c.e[cf[l.pull[x][x][p][u]]][cf[u]];
        }
        r += block;
      }
      long long inner = 0;
      for (int u = 0; u < l.fam[x].n; ++u) inner = inner * c.e[cf[u]][cf[u]] + c.rx[cf[u]];
      t.rx[off[x] + a] = checked_count(r + inner, "partial-product");
    }
  return t;
}

// Covariant: per-edge component fam[y], left extension is the pushforward,
// right extension is the identity. Contravariant: component fam[x], left
// extension the identity, right extension the pullback.
FinLens upgrade(const FinLens& l) {
  if (l.variance == Variance::Unbiased) return l;
  const bool cov = l.variance == Variance::OplaxCovariant;
  const int n = l.base.n;
  FinLens u;
  u.variance = Variance::Unbiased;
  u.base = l.base;
  u.fam_edge.assign(n, {});
  u.lext.assign(n, {});
  u.rext.assign(n, {});
  for (int x = 0; x < n; ++x) {
    u.fam_edge[x].assign(n, {});
    u.lext[x].assign(n, {});
    u.rext[x].assign(n, {});
    for (int y = 0; y < n; ++y) {
      u.fam_edge[x][y].assign(l.base.e[x][y], cov ? l.fam[y] : l.fam[x]);
      u.lext[x][y].assign(l.base.e[x][y], {});
      u.rext[x][y].assign(l.base.e[x][y], {});
      for (int p = 0; p < l.base.e[x][y]; ++p) {
        if (cov) {
          u.lext[x][y][p] = l.push[x][y][p];
          u.rext[x][y][p].resize(l.fam[y].n);
          for (int v = 0; v < l.fam[y].n; ++v) u.rext[x][y][p][v] = v;
        } else {
          u.lext[x][y][p].resize(l.fam[x].n);
          for (int w = 0; w < l.fam[x].n; ++w) u.lext[x][y][p][w] = w;
          u.rext[x][y][p] = l.pull[x][y][p];
        }
      }
    }
  }
  if (cov) {
    u.ext_rx = l.push_rx;
    u.rext_rx.assign(n, {});
    for (int x = 0; x < n; ++x) u.rext_rx[x] = l.fam[x].rx;
  } else {
    u.ext_rx = l.pull_rx;
    u.rext_rx = l.pull_rx;
  }
  return u;
}

// Components flip to their opposites; pushforwards along a base edge become
// pullbacks along the same edge read in the opposite base, and vice versa.
// The unitor edges transfer unchanged because the components flipped.
FinLens lens_total_opposite(const FinLens& l) {
  if (l.variance == Variance::Unbiased) bad("lens-total-opposite: unbiased lens");
  const bool cov = l.variance == Variance::OplaxCovariant;
  const int n = l.base.n;
  FinLens t;
  t.variance = cov ? Variance::LaxContravariant : Variance::OplaxCovariant;
  t.base = opposite(l.base);
  t.fam.resize(n);
  for (int x = 0; x < n; ++x) t.fam[x] = opposite(l.fam[x]);
  auto& maps = cov ? t.pull : t.push;
  maps.assign(n, {});
  for (int x = 0; x < n; ++x) {
    maps[x].assign(n, {});
    for (int y = 0; y < n; ++y) {
      maps[x][y].assign(t.base.e[x][y], {});
      for (int p = 0; p < t.base.e[x][y]; ++p)
        maps[x][y][p] = cov ? l.push[y][x][p] : l.pull[y][x][p];
    }
  }
  if (cov)
    t.pull_rx = l.push_rx;
  else
    t.push_rx = l.pull_rx;
  return t;
}

namespace {

const FinRxGraph& graph_input(const std::string& kind, const Inputs& in, std::size_t i) {
  if (in.graphs.size() <= i)
    bad(kind + ": expects at least " + std::to_string(i + 1) + " graph input(s)");
  try {
    validate(in.graphs[i]);
  } catch (const std::invalid_argument& e) {
    bad(kind + ": invalid input: " + e.what());
  }
  return in.graphs[i];
}

const FinDispRxGraph& displayed_input(const std::string& kind, const Inputs& in, std::size_t i) {
  if (in.displayed.size() <= i)
    bad(kind + ": expects at least " + std::to_string(i + 1) + " displayed input(s)");
  try {
    validate(in.displayed[i]);
  } catch (const std::invalid_argument& e) {
    bad(kind + ": invalid input: " + e.what());
  }
  return in.displayed[i];
}

const FinLens& lens_input(const std::string& kind, const Inputs& in, Variance want) {
  if (in.lenses.empty()) bad(kind + ": expects a lens input");
  const FinLens& l = in.lenses[0];
  if (l.variance != want)
    bad(kind + ": lens variance mismatch (got " + to_string(l.variance) + ")");
  try {
    validate(l);
  } catch (const std::invalid_argument& e) {
    bad(kind + ": invalid input: " + e.what());
  }
  return l;
}

int number_input(const std::string& kind, const Inputs& in, std::size_t i) {
  if (in.numbers.size() <= i)
    bad(kind + ": expects at least " + std::to_string(i + 1) + " number input(s)");
  return in.numbers[i];
}

const std::vector<int>& mask_input(const std::string& kind, const Inputs& in) {
  if (in.masks.empty()) bad(kind + ": expects a mask input");
  return in.masks[0];
}

std::vector<FinRxGraph> graph_family(const std::string& kind, const Inputs& in) {
  for (std::size_t i = 0; i < in.graphs.size(); ++i) graph_input(kind, in, i);
  return in.graphs;
}

}  // namespace

Constructed construct(const std::string& kind, const Inputs& in) {
  if (kind == "discrete") return discrete(number_input(kind, in, 0));
  if (kind == "codiscrete") return codiscrete(number_input(kind, in, 0));
  if (kind == "opposite") return opposite(graph_input(kind, in, 0));
  if (kind == "total-opposite") return total_opposite(displayed_input(kind, in, 0));
  if (kind == "total") return total(displayed_input(kind, in, 0));
  if (kind == "binary-product")
    return binary_product(graph_input(kind, in, 0), graph_input(kind, in, 1));
  if (kind == "product") return product(graph_family(kind, in));
  if (kind == "coproduct") return coproduct(graph_family(kind, in));
  if (kind == "tensor") return tensor(number_input(kind, in, 0), graph_input(kind, in, 0));
  if (kind == "cotensor") return cotensor(number_input(kind, in, 0), graph_input(kind, in, 0));
  if (kind == "constant-displayed")
    return constant_displayed(graph_input(kind, in, 0), graph_input(kind, in, 1));
  if (kind == "comprehension")
    return comprehension(graph_input(kind, in, 0), mask_input(kind, in));
  if (kind == "restriction")
    return restriction(displayed_input(kind, in, 0), displayed_input(kind, in, 1),
                       number_input(kind, in, 0));
  if (kind == "display-cov") return display(lens_input(kind, in, Variance::OplaxCovariant));
  if (kind == "display-ctrv") return display(lens_input(kind, in, Variance::LaxContravariant));
  if (kind == "display-unb") return display(lens_input(kind, in, Variance::Unbiased));
  if (kind == "flatten-cov") return flatten(lens_input(kind, in, Variance::OplaxCovariant));
  if (kind == "flatten-ctrv") return flatten(lens_input(kind, in, Variance::LaxContravariant));
  if (kind == "partial-product-cov")
    return partial_product(graph_input(kind, in, 0), lens_input(kind, in, Variance::OplaxCovariant));
  if (kind == "partial-product-ctrv")
    return partial_product(graph_input(kind, in, 0),
                           lens_input(kind, in, Variance::LaxContravariant));
  throw std::invalid_argument("unknown construction kind '" + kind + "'");
}

std::vector<std::string> construction_kinds() {
  return {"discrete",       "codiscrete",       "opposite",           "total-opposite",
          "total",          "binary-product",   "product",            "coproduct",
          "tensor",         "cotensor",         "constant-displayed", "comprehension",
          "restriction",    "display-cov",      "display-ctrv",       "display-unb",
          "flatten-cov",    "flatten-ctrv",     "partial-product-cov",
          "partial-product-ctrv"};
}

}  // namespace rgl::fin
