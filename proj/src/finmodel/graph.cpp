#include <sstream>
#include <stdexcept>

#include "rgl/finmodel.hpp"

namespace rgl::fin {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

void append_matrix(std::ostringstream& os, const std::vector<std::vector<int>>& m) {
  os << "[";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (size_t j = 0; j < m[i].size(); ++j) {
      if (j) os << ",";
      os << m[i][j];
    }
    os << "]";
  }
  os << "]";
}

void append_vec(std::ostringstream& os, const std::vector<int>& v) {
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << "]";
}

}  // namespace

void validate(const FinRxGraph& g) {
  if (g.n < 0) bad("graph: negative vertex count");
  if (static_cast<int>(g.e.size()) != g.n) bad("graph: edge matrix has wrong height");
  for (int x = 0; x < g.n; ++x) {
    if (static_cast<int>(g.e[x].size()) != g.n) bad("graph: edge matrix has wrong width");
    for (int y = 0; y < g.n; ++y)
      if (g.e[x][y] < 0) bad("graph: negative edge multiplicity");
  }
  if (static_cast<int>(g.rx.size()) != g.n) bad("graph: rx has wrong length");
  for (int x = 0; x < g.n; ++x)
    if (g.rx[x] < 0 || g.rx[x] >= g.e[x][x]) bad("graph: rx[x] is not a self-loop label");
}

std::string serialize(const FinRxGraph& g) {
  std::ostringstream os;
  os << "g{n=" << g.n << ";e=";
  append_matrix(os, g.e);
  os << ";rx=";
  append_vec(os, g.rx);
  os << "}";
  return os.str();
}

void validate(const FinDispRxGraph& d) {
  validate(d.base);
  const int n = d.base.n;
  if (static_cast<int>(d.fib.size()) != n) bad("displayed: fib has wrong length");
  for (int x = 0; x < n; ++x)
    if (d.fib[x] < 0) bad("displayed: negative fiber size");
  if (static_cast<int>(d.dedge.size()) != n) bad("displayed: dedge has wrong shape");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(d.dedge[x].size()) != n) bad("displayed: dedge has wrong shape");
    for (int y = 0; y < n; ++y) {
      if (static_cast<int>(d.dedge[x][y].size()) != d.base.e[x][y])
        bad("displayed: dedge has wrong shape over an edge set");
      for (int p = 0; p < d.base.e[x][y]; ++p) {
        if (static_cast<int>(d.dedge[x][y][p].size()) != d.fib[x])
          bad("displayed: dedge has wrong fiber shape");
        for (int u = 0; u < d.fib[x]; ++u) {
          if (static_cast<int>(d.dedge[x][y][p][u].size()) != d.fib[y])
            bad("displayed: dedge has wrong fiber shape");
          for (int v = 0; v < d.fib[y]; ++v)
            if (d.dedge[x][y][p][u][v] < 0) bad("displayed: negative edge multiplicity");
        }
      }
    }
  }
  if (static_cast<int>(d.drx.size()) != n) bad("displayed: drx has wrong length");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(d.drx[x].size()) != d.fib[x]) bad("displayed: drx has wrong length");
    for (int u = 0; u < d.fib[x]; ++u)
      if (d.drx[x][u] < 0 || d.drx[x][u] >= d.dedge[x][x][d.base.rx[x]][u][u])
        bad("displayed: drx[x][u] is not a displayed self-loop label");
  }
}

std::string serialize(const FinDispRxGraph& d) {
  std::ostringstream os;
  os << "disp{base=" << serialize(d.base) << ";fib=";
  append_vec(os, d.fib);
  os << ";dedge=[";
  for (int x = 0; x < d.base.n; ++x)
    for (int y = 0; y < d.base.n; ++y)
      for (int p = 0; p < d.base.e[x][y]; ++p)
        for (int u = 0; u < d.fib[x]; ++u)
          for (int v = 0; v < d.fib[y]; ++v)
            os << "(" << x << "," << y << "," << p << "," << u << "," << v
               << ")=" << d.dedge[x][y][p][u][v] << ";";
  os << "];drx=";
  append_matrix(os, d.drx);
  os << "}";
  return os.str();
}

std::string to_string(Variance v) {
  switch (v) {
    case Variance::OplaxCovariant: return "oplax-covariant";
    case Variance::LaxContravariant: return "lax-contravariant";
    case Variance::Unbiased: return "unbiased";
  }
  return "?";
}

const FinRxGraph& diag_component(const FinLens& l, int x) {
  return l.fam_edge[x][x][l.base.rx[x]];
}

namespace {

// Shape checks shared by the two biased variances: maps[x][y][p] must be a
// total function between the component vertex sets, in the direction the
// variance dictates.
void validate_biased_maps(const FinLens& l,
                          const std::vector<std::vector<std::vector<std::vector<int>>>>& maps,
                          bool forward, const char* what) {
  const int n = l.base.n;
  if (static_cast<int>(maps.size()) != n) bad(std::string("lens: ") + what + " has wrong shape");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(maps[x].size()) != n)
      bad(std::string("lens: ") + what + " has wrong shape");
    for (int y = 0; y < n; ++y) {
      if (static_cast<int>(maps[x][y].size()) != l.base.e[x][y])
        bad(std::string("lens: ") + what + " has wrong shape over an edge set");
      const int dom = forward ? l.fam[x].n : l.fam[y].n;
      const int cod = forward ? l.fam[y].n : l.fam[x].n;
      for (int p = 0; p < l.base.e[x][y]; ++p) {
        if (static_cast<int>(maps[x][y][p].size()) != dom)
          bad(std::string("lens: ") + what + " has wrong domain");
        for (int u = 0; u < dom; ++u)
          if (maps[x][y][p][u] < 0 || maps[x][y][p][u] >= cod)
            bad(std::string("lens: ") + what + " lands outside its codomain");
      }
    }
  }
}

}  // namespace

void validate(const FinLens& l) {
  validate(l.base);
  const int n = l.base.n;
  switch (l.variance) {
    case Variance::OplaxCovariant: {
      if (static_cast<int>(l.fam.size()) != n) bad("lens: fam has wrong length");
      for (const FinRxGraph& g : l.fam) validate(g);
      validate_biased_maps(l, l.push, true, "push");
      if (static_cast<int>(l.push_rx.size()) != n) bad("lens: push_rx has wrong length");
      for (int x = 0; x < n; ++x) {
        if (static_cast<int>(l.push_rx[x].size()) != l.fam[x].n)
          bad("lens: push_rx has wrong length");
        for (int u = 0; u < l.fam[x].n; ++u) {
          int src = l.push[x][x][l.base.rx[x]][u];
          if (l.push_rx[x][u] < 0 || l.push_rx[x][u] >= l.fam[x].e[src][u])
            bad("lens: push_rx[x][u] is not an edge label");
        }
      }
      break;
    }
    case Variance::LaxContravariant: {
      if (static_cast<int>(l.fam.size()) != n) bad("lens: fam has wrong length");
      for (const FinRxGraph& g : l.fam) validate(g);
      validate_biased_maps(l, l.pull, false, "pull");
      if (static_cast<int>(l.pull_rx.size()) != n) bad("lens: pull_rx has wrong length");
      for (int x = 0; x < n; ++x) {
        if (static_cast<int>(l.pull_rx[x].size()) != l.fam[x].n)
          bad("lens: pull_rx has wrong length");
        for (int u = 0; u < l.fam[x].n; ++u) {
          int dst = l.pull[x][x][l.base.rx[x]][u];
          if (l.pull_rx[x][u] < 0 || l.pull_rx[x][u] >= l.fam[x].e[u][dst])
            bad("lens: pull_rx[x][u] is not an edge label");
        }
      }
      break;
    }
    case Variance::Unbiased: {
      if (static_cast<int>(l.fam_edge.size()) != n) bad("lens: fam_edge has wrong shape");
      for (int x = 0; x < n; ++x) {
        if (static_cast<int>(l.fam_edge[x].size()) != n) bad("lens: fam_edge has wrong shape");
        for (int y = 0; y < n; ++y) {
          if (static_cast<int>(l.fam_edge[x][y].size()) != l.base.e[x][y])
            bad("lens: fam_edge has wrong shape over an edge set");
          for (const FinRxGraph& g : l.fam_edge[x][y]) validate(g);
        }
      }
      auto check_ext = [&](const std::vector<std::vector<std::vector<std::vector<int>>>>& ext,
                           bool left, const char* what) {
        if (static_cast<int>(ext.size()) != n) bad(std::string("lens: ") + what + " shape");
        for (int x = 0; x < n; ++x) {
          if (static_cast<int>(ext[x].size()) != n) bad(std::string("lens: ") + what + " shape");
          for (int y = 0; y < n; ++y) {
            if (static_cast<int>(ext[x][y].size()) != l.base.e[x][y])
              bad(std::string("lens: ") + what + " shape over an edge set");
            const int dom = left ? diag_component(l, x).n : diag_component(l, y).n;
            for (int p = 0; p < l.base.e[x][y]; ++p) {
              if (static_cast<int>(ext[x][y][p].size()) != dom)
                bad(std::string("lens: ") + what + " has wrong domain");
              for (int u = 0; u < dom; ++u)
                if (ext[x][y][p][u] < 0 || ext[x][y][p][u] >= l.fam_edge[x][y][p].n)
                  bad(std::string("lens: ") + what + " lands outside its codomain");
            }
          }
        }
      };
      check_ext(l.lext, true, "lext");
      check_ext(l.rext, false, "rext");
      if (static_cast<int>(l.ext_rx.size()) != n || static_cast<int>(l.rext_rx.size()) != n)
        bad("lens: unitor has wrong length");
      for (int x = 0; x < n; ++x) {
        const FinRxGraph& dg = diag_component(l, x);
        if (static_cast<int>(l.ext_rx[x].size()) != dg.n ||
            static_cast<int>(l.rext_rx[x].size()) != dg.n)
          bad("lens: unitor has wrong length");
        int r = l.base.rx[x];
        for (int u = 0; u < dg.n; ++u) {
          int lu = l.lext[x][x][r][u], ru = l.rext[x][x][r][u];
          if (l.ext_rx[x][u] < 0 || l.ext_rx[x][u] >= dg.e[lu][ru])
            bad("lens: ext_rx[x][u] is not an edge label");
          if (l.rext_rx[x][u] < 0 || l.rext_rx[x][u] >= dg.e[u][ru])
            bad("lens: rext_rx[x][u] is not an edge label");
        }
      }
      break;
    }
  }
}

std::string serialize(const FinLens& l) {
  std::ostringstream os;
  os << "lens{" << to_string(l.variance) << ";base=" << serialize(l.base) << ";";
  auto maps = [&](const std::vector<std::vector<std::vector<std::vector<int>>>>& m,
                  const char* tag) {
    os << tag << "=[";
    for (size_t x = 0; x < m.size(); ++x)
      for (size_t y = 0; y < m[x].size(); ++y)
        for (size_t p = 0; p < m[x][y].size(); ++p) {
          os << "(" << x << "," << y << "," << p << ")->";
          append_vec(os, m[x][y][p]);
          os << ";";
        }
    os << "];";
  };
  switch (l.variance) {
    case Variance::OplaxCovariant:
      os << "fam=[";
      for (const FinRxGraph& g : l.fam) os << serialize(g) << ";";
      os << "];";
      maps(l.push, "push");
      os << "pushRx=";
      append_matrix(os, l.push_rx);
      break;
    case Variance::LaxContravariant:
      os << "fam=[";
      for (const FinRxGraph& g : l.fam) os << serialize(g) << ";";
      os << "];";
      maps(l.pull, "pull");
      os << "pullRx=";
      append_matrix(os, l.pull_rx);
      break;
    case Variance::Unbiased:
      os << "famEdge=[";
      for (size_t x = 0; x < l.fam_edge.size(); ++x)
        for (size_t y = 0; y < l.fam_edge[x].size(); ++y)
          for (size_t p = 0; p < l.fam_edge[x][y].size(); ++p)
            os << "(" << x << "," << y << "," << p << ")=" << serialize(l.fam_edge[x][y][p])
               << ";";
      os << "];";
      maps(l.lext, "lext");
      maps(l.rext, "rext");
      os << "extRx=";
      append_matrix(os, l.ext_rx);
      os << ";rextRx=";
      append_matrix(os, l.rext_rx);
      break;
  }
  os << "}";
  return os.str();
}

// --- univalence --------------------------------------------------------------

UnivalenceProbe univalence_probe(const FinRxGraph& g) {
  UnivalenceProbe p;

  // 1. fans are propositions: at most one outgoing edge in total.
  p.fan_prop = true;
  for (int x = 0; x < g.n; ++x) {
    int total = 0;
    for (int y = 0; y < g.n; ++y) total += g.e[x][y];
    if (total > 1) p.fan_prop = false;
  }

  // 2. cofans are propositions: at most one incoming edge in total.
  p.cofan_prop = true;
  for (int x = 0; x < g.n; ++x) {
    int total = 0;
    for (int y = 0; y < g.n; ++y) total += g.e[y][x];
    if (total > 1) p.cofan_prop = false;
  }

  // 3. fans are contractible onto (x, rx[x]): exactly one outgoing edge, and
  //    it is the chosen self-loop.
  p.fan_contractible = true;
  for (int x = 0; x < g.n; ++x) {
    int total = 0;
    for (int y = 0; y < g.n; ++y) total += g.e[x][y];
    if (total != 1 || g.e[x][x] != 1 || g.rx[x] != 0) p.fan_contractible = false;
  }

  // 4. cofans are contractible onto (x, rx[x]).
  p.cofan_contractible = true;
  for (int x = 0; x < g.n; ++x) {
    int total = 0;
    for (int y = 0; y < g.n; ++y) total += g.e[y][x];
    if (total != 1 || g.e[x][x] != 1 || g.rx[x] != 0) p.cofan_contractible = false;
  }

  // 5. idToEdge is an equivalence: |Id(x,y)| == e(x,y) everywhere (the map
  //    refl -> rx[x] is then automatically a bijection of singletons).
  p.id_to_edge_equiv = true;
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      int id_count = (x == y) ? 1 : 0;
      if (g.e[x][y] != id_count) p.id_to_edge_equiv = false;
    }

  return p;
}

bool is_univalent(const FinRxGraph& g) {
  UnivalenceProbe p = univalence_probe(g);
  if (!p.agree())
    throw std::logic_error("univalence conditions disagree on " + serialize(g));
  return p.fan_prop;
}

FinRxGraph component(const FinDispRxGraph& d, int x) {
  FinRxGraph g;
  g.n = d.fib[x];
  g.e.assign(g.n, std::vector<int>(g.n, 0));
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) g.e[u][v] = d.dedge[x][x][d.base.rx[x]][u][v];
  g.rx.assign(g.n, 0);
  for (int u = 0; u < g.n; ++u) g.rx[u] = d.drx[x][u];
  return g;
}

bool is_univalent_displayed(const FinDispRxGraph& d) {
  for (int x = 0; x < d.base.n; ++x)
    if (!is_univalent(component(d, x))) return false;
  return true;
}

}  // namespace rgl::fin
