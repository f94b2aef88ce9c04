#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lettergrid/perm.hpp"

namespace lettergrid {

/// A cell (k, l): column k counted from the left, row l from the bottom.
using Cell = std::pair<int, int>;

/// A t x u matrix over {-1, 0, 1} in cartesian indexing: at(k, l) is the
/// entry in column k (1..t) and row l (1..u).
class GridMatrix {
 public:
  GridMatrix() = default;
  /// All-zero t x u matrix.
  GridMatrix(int cols, int rows);
  /// Rows listed top to bottom, as a matrix is usually written down.
  static GridMatrix from_display(const std::vector<std::vector<int>>& display);

  int cols() const { return t_; }
  int rows() const { return u_; }
  int at(int k, int l) const { return entries_[index(k, l)]; }
  void set(int k, int l, int value);
  bool column_empty(int k) const;
  bool row_empty(int l) const;
  /// Nonzero cells ordered by column, then row.
  std::vector<Cell> nonzero_cells() const;
  /// Rows top to bottom.
  std::vector<std::vector<int>> display() const;

  bool operator==(const GridMatrix&) const = default;

 private:
  std::size_t index(int k, int l) const;
  int t_ = 0;
  int u_ = 0;
  std::vector<int> entries_;  // column-major, entries_[(k-1)*u + (l-1)]
};

/// A permutation together with an M-gridding. Column k holds the positions
/// [col_divs[k-1], col_divs[k]), row l the values [row_divs[l-1], row_divs[l]).
struct GriddedPermutation {
  Permutation perm;
  GridMatrix matrix;
  std::vector<int> col_divs;  // x_1 .. x_{t+1}
  std::vector<int> row_divs;  // y_1 .. y_{u+1}

  /// Column and row holding the entry at position i.
  Cell cell_of(int i) const;
  /// Division shape, bounds and the monotonicity of every cell.
  bool valid() const;
  /// Positions in cell (k, l), left to right.
  std::vector<int> entries_in(int k, int l) const;

  bool operator==(const GriddedPermutation&) const = default;
};

/// Column and row signs with every nonzero entry equal to c_k * r_l.
struct SignedMatrix {
  GridMatrix matrix;
  std::vector<int> col_signs;
  std::vector<int> row_signs;

  bool valid() const;
  bool operator==(const SignedMatrix&) const = default;
};

/// Lexicographically first M-gridding of pi (column divisions, then row
/// divisions), or nullopt when pi is not in Grid(M).
std::optional<GriddedPermutation> find_gridding(const Permutation& pi, const GridMatrix& m);
/// Every M-gridding of pi in the same order.
std::vector<GriddedPermutation> all_griddings(const Permutation& pi, const GridMatrix& m);
/// Visits the griddings in that order until `visit` returns false.
void for_each_gridding(const Permutation& pi, const GridMatrix& m,
                       const std::function<bool(const GriddedPermutation&)>& visit);

/// Avoids 2143 and 3412.
bool is_skew_merged(const Permutation& pi);

/// m: largest m with 2143...(2m)(2m-1) contained in pi.
/// m_reverse: largest m with (2m-1)(2m)...3412 contained in pi.
struct MatchingWitness {
  int m = 0;
  int m_reverse = 0;
  bool operator==(const MatchingWitness&) const = default;
};
MatchingWitness matching_pattern_witness(const Permutation& pi);
/// 2143...(2m)(2m-1), and its reverse (2m-1)(2m)...3412 when `reverse`.
Permutation matching_pattern(int m, bool reverse = false);

/// Signs making m a partial multiplication matrix, or nullopt. The first
/// column of every connected block of nonzero entries gets sign +1; columns
/// and rows without nonzero entries get +1.
std::optional<SignedMatrix> pmm_signs(const GridMatrix& m);
/// Every valid sign assignment (2^c of them, c = number of connected blocks
/// counting empty columns and rows separately); empty if m is not a PMM.
std::vector<SignedMatrix> all_pmm_signs(const GridMatrix& m);

/// The 2t x 2u matrix M^{x2}: a +1 entry becomes +1 at local (1,1) and (2,2),
/// a -1 entry becomes -1 at local (1,2) and (2,1).
GridMatrix doubled(const GridMatrix& m);
/// Column signs (-1)^k and row signs (-1)^l, valid for every doubled matrix.
SignedMatrix doubled_signs(const GridMatrix& doubled_matrix);

/// S(k, l) = (-1)^(k+l-1) on a 2t x 2u grid.
GridMatrix universal_matrix(int t, int u);

/// Matrix text format: one line per row, top row first, entries -1/0/1.
GridMatrix parse_matrix(std::string_view text);
std::string format_matrix(const GridMatrix& m);

}  // namespace lettergrid
