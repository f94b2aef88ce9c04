#pragma once

// Matrices and permutations that recur across the tests.

#include <vector>

#include "lettergrid/gridding.hpp"
#include "lettergrid/perm.hpp"

namespace lettergrid::testing {

// Increasing bottom-left and top-right, decreasing elsewhere.
inline GridMatrix x_matrix() { return GridMatrix::from_display({{-1, 1}, {1, -1}}); }

// Two stacked cells: increasing below a decreasing one.
inline GridMatrix v_matrix() { return GridMatrix::from_display({{-1}, {1}}); }

inline GridMatrix staircase_matrix() { return GridMatrix::from_display({{-1, 1, 1}, {0, -1, -1}}); }

// Not a partial multiplication matrix.
inline GridMatrix non_pmm_matrix() { return GridMatrix::from_display({{1, -1}, {1, 1}}); }

inline GriddedPermutation staircase_gridding() {
  return GriddedPermutation{Permutation{6, 4, 3, 7, 2, 5, 1}, staircase_matrix(), {1, 3, 5, 8}, {1, 4, 8}};
}

inline std::vector<Permutation> permutations_up_to(int n_max) {
  std::vector<Permutation> out;
  for (int n = 0; n <= n_max; ++n)
    for (auto& p : all_permutations(n)) out.push_back(std::move(p));
  return out;
}

}  // namespace lettergrid::testing
