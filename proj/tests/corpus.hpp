/**
 * @file corpus.hpp
 * @brief Shared test corpus: the builtin 2-groups plus a family of
 *        synthetic 2-groups exercising nontrivial associators and actions.
 */
#pragma once

#include <vector>

#include "twogroup.hpp"

namespace twochar::testcorpus {

inline std::vector<std::vector<std::vector<int>>> zero_alpha(int n) {
  return std::vector<std::vector<std::vector<int>>>(
      n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
}

inline std::vector<std::vector<int>> identity_rows(int n, int m) {
  std::vector<std::vector<int>> table(n, std::vector<int>(m));
  for (auto& row : table) {
    for (int a = 0; a < m; ++a) row[a] = a;
  }
  return table;
}

// pi1 = Z2, pi2 = Z4, trivial action, alpha(x,x,x) = 2.
inline FiniteTwoGroup fuzz_z2_z4() {
  auto alpha = zero_alpha(2);
  alpha[1][1][1] = 2;
  return build_two_group(cyclic_group(2), AbelianGroup({4}),
                         identity_rows(2, 4), alpha, 4, "fuzz-z2-z4");
}

// pi1 = Z3, pi2 = Z3, trivial action, alpha(a,b,c) = a * carry(b,c) mod 3.
inline FiniteTwoGroup fuzz_z3_z3() {
  auto alpha = zero_alpha(3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) alpha[a][b][c] = (a * ((b + c) / 3)) % 3;
    }
  }
  return build_two_group(cyclic_group(3), AbelianGroup({3}),
                         identity_rows(3, 3), alpha, 3, "fuzz-z3-z3");
}

// pi1 = Z4, pi2 = Z2, trivial action, alpha(a,b,c) = a * carry(b,c) mod 2.
inline FiniteTwoGroup fuzz_z4_z2() {
  auto alpha = zero_alpha(4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) alpha[a][b][c] = (a * ((b + c) / 4)) % 2;
    }
  }
  return build_two_group(cyclic_group(4), AbelianGroup({2}),
                         identity_rows(4, 2), alpha, 4, "fuzz-z4-z2");
}

// pi1 = S3 acting on pi2 = Z3 through the sign map, trivial associator.
inline FiniteTwoGroup fuzz_s3_z3() {
  std::vector<std::vector<int>> action = {{0, 1, 2}, {0, 2, 1}, {0, 2, 1},
                                          {0, 2, 1}, {0, 1, 2}, {0, 1, 2}};
  return build_two_group(symmetric_group_3(), AbelianGroup({3}), action,
                         zero_alpha(6), 6, "fuzz-s3-z3");
}

/// Builtins followed by the synthetic 2-groups.
inline std::vector<FiniteTwoGroup> engine_corpus() {
  std::vector<FiniteTwoGroup> out;
  for (const auto& name : builtin_two_group_names()) {
    out.push_back(builtin_two_group(name));
  }
  out.push_back(fuzz_z2_z4());
  out.push_back(fuzz_z3_z3());
  out.push_back(fuzz_z4_z2());
  out.push_back(fuzz_s3_z3());
  return out;
}

}  // namespace twochar::testcorpus
