#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lettergrid/geometry.hpp"
#include "lettergrid/gridding.hpp"
#include "lettergrid/letters.hpp"
#include "lettergrid/perm.hpp"

namespace lettergrid {

/// A third entry lies strictly between pi(i) and pi(j) in position or in
/// value, but not in both.
bool separated(const Permutation& pi, int i, int j);
/// Some third vertex is adjacent to exactly one of u and v.
bool distinguished(const SimpleGraph& g, int u, int v);

/// A letter of the original alphabet tagged with the cell of its entries.
struct RefinedLetter {
  Letter letter = 0;
  Cell cell;
  auto operator<=>(const RefinedLetter&) const = default;
};

/// Letters are RefinedLetters in increasing order; (x, y) is in the decoder
/// iff (x.letter, y.letter) is in the original one.
struct RefinedLetterization {
  std::vector<RefinedLetter> letters;
  Alphabet alphabet;  // symbols "<letter>@k.l"
  Decoder decoder;
  std::vector<Letter> word;
  std::vector<int> iso;
};

/// Throws std::invalid_argument unless lz is a lettering of the inversion
/// graph of gp.perm.
RefinedLetterization reletter(const Letterization& lz, const Alphabet& original_alphabet,
                              const GriddedPermutation& gp);

/// Positions encoded by refined letter x, in position order.
std::vector<int> entries_of(const RefinedLetterization& rlz, Letter x);

struct ReadingOrder {
  bool left_to_right = true;
  bool bottom_to_top = true;
  bool operator==(const ReadingOrder&) const = default;
};

/// One order per refined letter. Single-entry letters read left to right.
/// Throws std::logic_error if psi is not monotone on some letter's entries.
std::vector<ReadingOrder> reading_orders(const RefinedLetterization& rlz, const GriddedPermutation& gp);

struct HullRectangle {
  int x_min = 0, x_max = 0;  // positions
  int y_min = 0, y_max = 0;  // values
};

struct Regridding {
  GriddedPermutation gridding;  // matrix holds the monotone cell signs, zero elsewhere
  std::vector<HullRectangle> hulls;
  int raw_cols = 0;  // divisions before empty columns were dropped
  int raw_rows = 0;
};

/// Cuts just outside every letter's rectangular hull, merged with the
/// original divisions; empty columns and rows are dropped.
Regridding regrid(const GriddedPermutation& gp, const RefinedLetterization& rlz);

/// Signs from the reading orders, with M##(k, l) = c_k * r_l on every cell.
/// Throws std::logic_error on conflicting reading orders in one column or row,
/// or when an occupied cell's sign disagrees with its monotone direction.
SignedMatrix assign_signs(const GriddedPermutation& regridded, const RefinedLetterization& rlz,
                          const std::vector<ReadingOrder>& ro);

/// Positions i..j (consecutive) with consecutive values inside one cell,
/// collapsed to single entries.
struct CellContraction {
  GriddedPermutation contracted;
  std::vector<std::pair<int, int>> source_ranges;  // per contracted position
  bool changed = false;
};
CellContraction contract_in_cells(const GriddedPermutation& gp);

struct GeometrizeResult {
  GriddedPermutation original;       // pi with its M-gridding
  CellContraction contraction;       // sigma# and the blocks it collapsed
  Letterization lettering;           // of the inversion graph of sigma
  RefinedLetterization refined;
  std::vector<ReadingOrder> reading;
  Regridding regridded;              // sigma## before signs
  SignedMatrix signs;                // M## with its signs
  GriddedPermutation contracted_result;  // sigma## on M##
  GriddedPermutation result;         // pi## on M##
  Realization realization;           // of pi##
};

/// Geometric gridding of pi by a PMM built from an M-gridding and a minimal
/// lettering. Throws std::invalid_argument if pi is not in Grid(m) or no
/// lettering with at most k_max letters exists; throws std::logic_error if an
/// internal check fails.
GeometrizeResult geometrize(const Permutation& pi, const GridMatrix& m, int k_max);

/// Largest column and row counts the construction may produce.
std::pair<int, int> size_bound(const GridMatrix& m, int r);

/// Same-letter entries separated by x have psi(x) strictly between them.
bool check_distinguish(const Permutation& pi, const Letterization& lz);
/// For i1 < i2 < i3 < i4 with i1, i3 sharing a letter and a cell and i2, i4
/// sharing a letter and another cell, psi is monotone on the four; likewise
/// for values.
bool check_separate_cells(const GriddedPermutation& gp, const Letterization& lz);
/// Every single-entry refined letter's entry shares no column or row of the
/// regridding with another entry.
bool check_isolation(const GeometrizeResult& r);

/// True iff pi## embeds into the universal matrix S_{t,u} as a geometric gridding.
bool universal_member(const GriddedPermutation& gp, const SignedMatrix& signs, int t, int u);

struct ExperimentRow {
  Permutation perm;
  int lettericity = 0;
  int cols = 0;
  int rows = 0;
  bool geometrized = false;
  bool bound_ok = false;
  bool realized_ok = false;
  bool member_ok = false;
  bool universal_ok = false;
  std::string error;
  bool passed() const { return geometrized && bound_ok && realized_ok && member_ok && universal_ok; }
};

struct ExperimentReport {
  int n_max = 0;
  int r = 0;
  GridMatrix matrix;
  int bound_cols = 0;
  int bound_rows = 0;
  long considered = 0;    // permutations of length 1..n_max
  long in_grid = 0;
  long over_r = 0;        // in Grid(m) but lettericity > r
  std::vector<ExperimentRow> rows;  // sorted by permutation
  long failures() const;
};

using MembershipCheck = std::function<bool(const Permutation&, const GridMatrix&)>;

/// Geometrizes every pi of length 1..n_max in Grid(m) with lettericity at most
/// r, checking the size bound, the realization, membership via `verify` and
/// membership in the universal matrix. Work is spread over `threads` workers
/// (0 means hardware concurrency).
ExperimentReport class_experiment(int n_max, const GridMatrix& m, int r, const MembershipCheck& verify,
                                  unsigned threads = 0);

/// Tab-separated rows followed by "#" summary lines.
std::string format_report(const ExperimentReport& report);

}  // namespace lettergrid
