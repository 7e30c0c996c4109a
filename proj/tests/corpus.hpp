#pragma once

// Germs used across suites.

#include "support.hpp"

namespace testing_support {

struct NamedGerm {
  std::string name;
  std::string eq;  // in u, v
};

inline std::vector<NamedGerm> germ_corpus() {
  std::vector<NamedGerm> c;
  for (int k = 1; k <= 10; ++k) c.push_back({"A" + std::to_string(k), "u^2-v^" + std::to_string(k + 1)});
  for (int k = 4; k <= 8; ++k) c.push_back({"D" + std::to_string(k), "u^2*v-v^" + std::to_string(k - 1)});
  c.push_back({"E6", "u^3-v^4"});
  c.push_back({"E7", "u^3-u*v^3"});
  c.push_back({"E8", "u^3-v^5"});
  for (int r = 3; r <= 6; ++r) c.push_back({"ord" + std::to_string(r), "u^" + std::to_string(r) + "-v^" + std::to_string(r)});
  c.push_back({"ord4irr", "u^4-2*v^4"});
  c.push_back({"J10", "u^3-v^6"});
  c.push_back({"X", "u^4-v^6"});
  c.push_back({"nonic_a35", "u^9+(u+v^4)^2"});
  c.push_back({"nonic_a31", "u^9+u^8+(u+v^4)^2"});
  c.push_back({"septic_cusps", "u^7+v^7+(u-v)^2*u^2*v^2"});
  c.push_back({"tacnode_cusp", "(u^2-v^3)*(u^3-v^2)"});
  c.push_back({"W", "u^4+v^5+u^2*v^3"});
  return c;
}

}  // namespace testing_support
