#pragma once

#include <algorithm>

#include "blockext/block_spec.hpp"

namespace blockext::testing {

// p = 3, D = C_3, E = C_4 acting by inversion, Z = C_2
inline BlockSpec example_a() {
  BlockSpec s;
  s.p = 3;
  s.exponents = {1};
  s.generators = {{1, 2, 3, 0}};
  s.actions = {{{2}}};
  return s;
}

// p = 3, D = C_3 x C_3, E = C_4 inverting the first factor only
inline BlockSpec example_b() {
  BlockSpec s;
  s.p = 3;
  s.exponents = {1, 1};
  s.generators = {{1, 2, 3, 0}};
  s.actions = {{{2, 0}, {0, 1}}};
  return s;
}

// p = 2, D = C_4 x C_4, E = C_3 through an order-3 matrix, Z = 1
inline BlockSpec example_c() {
  BlockSpec s;
  s.p = 2;
  s.exponents = {2, 2};
  s.generators = {{1, 2, 0}};
  s.actions = {{{0, -1}, {1, -1}}};
  return s;
}

// E trivial acting on D, pure abelian defect
inline BlockSpec pure_abelian(std::int64_t p, std::vector<int> exponents) {
  BlockSpec s;
  s.p = p;
  s.exponents = std::move(exponents);
  return s;
}

// Units 1, i, j, k, -1, -i, -j, -k as points 0..7, left multiplication by i and j.
inline std::vector<Perm> quaternion_generators() { return {{1, 4, 3, 6, 5, 0, 7, 2}, {2, 7, 4, 1, 6, 3, 0, 5}}; }

}  // namespace blockext::testing

namespace blockext::testing {

// SL(2,3) acting on the 8 non-zero vectors of F_3^2.
inline std::vector<Perm> sl23_generators() {
  std::vector<std::pair<int, int>> pts;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) pts.push_back({a, b});
  auto perm_of = [&](int m00, int m01, int m10, int m11) {
    Perm p;
    for (auto [a, b] : pts) {
      std::pair<int, int> img{(m00 * a + m01 * b) % 3, (m10 * a + m11 * b) % 3};
      p.push_back(static_cast<int>(std::find(pts.begin(), pts.end(), img) - pts.begin()));
    }
    return p;
  };
  return {perm_of(1, 1, 0, 1), perm_of(1, 0, 1, 1)};
}

}  // namespace blockext::testing
