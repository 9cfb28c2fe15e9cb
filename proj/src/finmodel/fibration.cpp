#include <stdexcept>

#include "rgl/finmodel.hpp"

namespace rgl::fin {

namespace {

// Shapes a witness table indexed [x][y][p] with inner size given by fn(x,y).
template <class Inner>
void shape_tables(const FinDispRxGraph& d, FibrationWitness& w, Inner&& inner) {
  const int n = d.base.n;
  w.vertex.assign(n, {});
  w.edge.assign(n, {});
  w.singleton.assign(n, {});
  for (int x = 0; x < n; ++x) {
    w.vertex[x].assign(n, {});
    w.edge[x].assign(n, {});
    w.singleton[x].assign(n, {});
    for (int y = 0; y < n; ++y) {
      int m = inner(x, y);
      w.vertex[x][y].assign(d.base.e[x][y], std::vector<int>(m, -1));
      w.edge[x][y].assign(d.base.e[x][y], std::vector<int>(m, -1));
      w.singleton[x][y].assign(d.base.e[x][y], std::vector<bool>(m, false));
    }
  }
}

}  // namespace

// The lift set of (p : x -> y, u over x) is { (v, q) : q in dedge[p][u][v] };
// a covariant fibration has exactly one element in every lift set.
FibrationWitness probe_cov_fibration(const FinDispRxGraph& d) {
  FibrationWitness w;
  w.complete = true;
  shape_tables(d, w, [&](int x, int) { return d.fib[x]; });
  for (int x = 0; x < d.base.n; ++x)
    for (int y = 0; y < d.base.n; ++y)
      for (int p = 0; p < d.base.e[x][y]; ++p)
        for (int u = 0; u < d.fib[x]; ++u) {
          int count = 0, vtx = -1;
          for (int v = 0; v < d.fib[y]; ++v) {
            int m = d.dedge[x][y][p][u][v];
            count += m;
            if (m > 0) vtx = v;
          }
          if (count == 1) {
            w.singleton[x][y][p][u] = true;
            w.vertex[x][y][p][u] = vtx;
            w.edge[x][y][p][u] = 0;
          } else {
            w.complete = false;
          }
        }
  return w;
}

// Dual probe: the lift set of (p : x -> y, v over y) collects displayed edges
// into v from every vertex over x.
FibrationWitness probe_ctrv_fibration(const FinDispRxGraph& d) {
  FibrationWitness w;
  w.complete = true;
  shape_tables(d, w, [&](int, int y) { return d.fib[y]; });
  for (int x = 0; x < d.base.n; ++x)
    for (int y = 0; y < d.base.n; ++y)
      for (int p = 0; p < d.base.e[x][y]; ++p)
        for (int v = 0; v < d.fib[y]; ++v) {
          int count = 0, vtx = -1;
          for (int u = 0; u < d.fib[x]; ++u) {
            int m = d.dedge[x][y][p][u][v];
            count += m;
            if (m > 0) vtx = u;
          }
          if (count == 1) {
            w.singleton[x][y][p][v] = true;
            w.vertex[x][y][p][v] = vtx;
            w.edge[x][y][p][v] = 0;
          } else {
            w.complete = false;
          }
        }
  return w;
}

std::optional<FibrationWitness> is_cov_fibration(const FinDispRxGraph& d) {
  FibrationWitness w = probe_cov_fibration(d);
  if (!w.complete) return std::nullopt;
  return w;
}

std::optional<FibrationWitness> is_ctrv_fibration(const FinDispRxGraph& d) {
  FibrationWitness w = probe_ctrv_fibration(d);
  if (!w.complete) return std::nullopt;
  return w;
}

// Pushforwards send u to the centre of its singleton lift; the unitor at
// (x,u) is the reflexivity datum straightened through the unit lift, i.e.
// drx read at the pushforward of u along the base reflexivity edge.
FinLens underlying_lens(const FinDispRxGraph& d, const FibrationWitness& w) {
  if (!w.complete) throw std::invalid_argument("underlying_lens: incomplete fibration witness");
  const int n = d.base.n;
  FinLens l;
  l.variance = Variance::OplaxCovariant;
  l.base = d.base;
  l.fam.resize(n);
  for (int x = 0; x < n; ++x) l.fam[x] = component(d, x);
  l.push = w.vertex;
  l.push_rx.assign(n, {});
  for (int x = 0; x < n; ++x) {
    l.push_rx[x].assign(d.fib[x], 0);
    for (int u = 0; u < d.fib[x]; ++u)
      l.push_rx[x][u] = d.drx[x][w.vertex[x][x][d.base.rx[x]][u]];
  }
  validate(l);
  return l;
}

}  // namespace rgl::fin
