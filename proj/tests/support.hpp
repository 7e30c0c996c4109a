#pragma once

#include "planecurve/exactalg.hpp"

#include <random>

namespace testing_support {

using namespace planecurve;

inline Ring xyz() { return Ring(Field(), {"x", "y", "z"}); }
inline Ring xy() { return Ring(Field(), {"x", "y"}); }
inline Ring uv() { return Ring(Field(), {"u", "v"}); }

inline Poly P(const std::string& s, const Ring& r) { return parse_poly(s, r); }

// Random polynomial with small integer coefficients.
inline Poly random_poly(const Ring& r, std::mt19937_64& rng, int maxdeg, int nterms, int mindeg = 0) {
  Poly p(r);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> dd(mindeg, maxdeg);
  for (int k = 0; k < nterms; ++k) {
    Mono m;
    int d = dd(rng);
    for (int i = 0; i < r.nvars() - 1; ++i) {
      std::uniform_int_distribution<int> e(0, d);
      m[i] = e(rng);
      d -= m[i];
    }
    m[r.nvars() - 1] = d;
    p.add_term(m, Scalar(coef(rng)));
  }
  return p;
}

}  // namespace testing_support
