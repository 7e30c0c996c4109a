#pragma once

// Independent dense linear-algebra oracles used by several suites.

#include "support.hpp"

namespace testing_support {

// dim of K[u,v] / (gens + m^k), by exact Gaussian elimination on the space of polynomials of degree < k.
inline long dense_colength(const std::vector<Poly>& gens, int k) {
  std::vector<Mono> mons;
  for (int d = 0; d < k; ++d)
    for (int a = d; a >= 0; --a) {
      Mono m;
      m[0] = a;
      m[1] = d - a;
      mons.push_back(m);
    }
  auto index = [&](const Mono& m) {
    int d = m.deg();
    return d * (d + 1) / 2 + (d - m[0]);
  };
  int n = static_cast<int>(mons.size());
  int dim = gens.empty() ? 1 : gens.front().field().degree();
  std::vector<std::vector<mpq_class>> rows;
  for (auto& g : gens)
    for (auto& s : mons) {
      // one row per rational coordinate of the coefficient field
      for (int coord = 0; coord < dim; ++coord) {
        std::vector<mpq_class> row(static_cast<size_t>(n) * dim);
        bool any = false;
        for (auto& [m, c] : g.terms()) {
          Mono t = m + s;
          if (t.deg() >= k) continue;
          // multiply coefficient by generator^coord
          Scalar cc = c;
          if (coord > 0) cc = cc * Scalar::generator(g.field()).pow(coord);
          for (int j = 0; j < dim; ++j) {
            mpq_class v = j < static_cast<int>(cc.coords().size()) ? cc.coords()[j] : mpq_class(0);
            if (v != 0) {
              row[static_cast<size_t>(index(t)) * dim + j] += v;
              any = true;
            }
          }
        }
        if (any) rows.push_back(std::move(row));
      }
    }
  int cols = n * dim;
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      mpq_class t = rows[r][c] / rows[rank][c];
      for (int j = c; j < cols; ++j) rows[r][j] -= t * rows[rank][j];
    }
    ++rank;
  }
  return (cols - rank) / dim;
}

}  // namespace testing_support
