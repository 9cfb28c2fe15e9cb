#include <stdexcept>

#include "rgl/finmodel.hpp"

namespace rgl::fin {

std::uint64_t count_graphs(int n, int max_mult) {
  if (n < 0 || max_mult < 1) throw std::invalid_argument("count_graphs: bad bounds");
  auto pow_u64 = [](std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  // Per vertex: a diagonal multiplicity c in 1..K and one of c self-loop
  // choices for rx. Per ordered pair of distinct vertices: a multiplicity in
  // 0..K.
  std::uint64_t diag = 0;
  for (int c = 1; c <= max_mult; ++c) diag += static_cast<std::uint64_t>(c);
  return pow_u64(diag, n) * pow_u64(static_cast<std::uint64_t>(max_mult) + 1, n * (n - 1));
}

std::vector<FinRxGraph> enumerate_graphs(int max_vertices, int max_mult) {
  if (max_vertices < 0 || max_mult < 1)
    throw std::invalid_argument("enumerate_graphs: bad bounds");
  std::vector<FinRxGraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    FinRxGraph g;
    g.n = n;
    g.e.assign(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x) g.e[x][x] = 1;  // smallest legal matrix
    // Odometer over the edge matrix in row-major order; diagonal cells run
    // 1..K, off-diagonal cells 0..K.
    bool more_matrices = true;
    while (more_matrices) {
      // All rx choices for this matrix, in lexicographic order.
      g.rx.assign(n, 0);
      bool more_rx = true;
      while (more_rx) {
        out.push_back(g);
        more_rx = false;
        for (int x = n - 1; x >= 0; --x) {
          if (g.rx[x] + 1 < g.e[x][x]) {
            g.rx[x]++;
            for (int y = x + 1; y < n; ++y) g.rx[y] = 0;
            more_rx = true;
            break;
          }
        }
      }
      // Advance the matrix.
      more_matrices = false;
      for (int cell = n * n - 1; cell >= 0; --cell) {
        int x = cell / n, y = cell % n;
        if (g.e[x][y] < max_mult) {
          g.e[x][y]++;
          for (int c = cell + 1; c < n * n; ++c) {
            int cx = c / n, cy = c % n;
            g.e[cx][cy] = (cx == cy) ? 1 : 0;
          }
          more_matrices = true;
          break;
        }
      }
    }
  }
  return out;
}

int count_monotone_bijections(int m, int n) {
  // Brute force over all maps Fin(m) -> Fin(n): count those that are
  // injective, surjective and strictly order-preserving. No arithmetic
  // shortcuts: this is the oracle the library's gauntness postulate leans on.
  if (m < 0 || n < 0) throw std::invalid_argument("count_monotone_bijections: bad sizes");
  if (m == 0) return n == 0 ? 1 : 0;  // the empty map
  std::vector<int> f(m, 0);
  int count = 0;
  bool more = n > 0;
  while (more) {
    bool mono = true;
    for (int i = 0; i + 1 < m && mono; ++i)
      if (f[i] >= f[i + 1]) mono = false;
    if (mono) {
      std::vector<bool> hit(n, false);
      bool inj = true;
      for (int i = 0; i < m; ++i) {
        if (hit[f[i]]) inj = false;
        hit[f[i]] = true;
      }
      bool surj = true;
      for (int y = 0; y < n; ++y)
        if (!hit[y]) surj = false;
      if (inj && surj) count++;
    }
    more = false;
    for (int i = m - 1; i >= 0; --i) {
      if (f[i] + 1 < n) {
        f[i]++;
        for (int j = i + 1; j < m; ++j) f[j] = 0;
        more = true;
        break;
      }
    }
  }
  return count;
}

}  // namespace rgl::fin
