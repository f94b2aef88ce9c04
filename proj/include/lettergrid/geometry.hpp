#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lettergrid/gridding.hpp"
#include "lettergrid/letters.hpp"

namespace lettergrid {

/// Open unit diagonal of a nonzero cell, from (x0, y0) to (x1, y1).
struct Segment {
  Cell cell;
  double x0, y0, x1, y1;
};

/// Increasing diagonal (k-1,l-1)-(k,l) for +1 cells, decreasing (k-1,l)-(k,l-1) for -1.
std::vector<Segment> standard_figure(const GridMatrix& m);

/// Corner of cell (k, l) that distances are measured from under the signs.
std::pair<double, double> base_point(const SignedMatrix& signs, int k, int l);

/// column_orders[k-1] lists the positions in column k from least to greatest
/// under its column order; row_orders likewise.
struct LocalOrders {
  std::vector<std::vector<int>> column_orders;
  std::vector<std::vector<int>> row_orders;
  bool operator==(const LocalOrders&) const = default;
};

/// Throws std::invalid_argument when the matrices differ or the signs are invalid.
LocalOrders local_orders(const GriddedPermutation& gp, const SignedMatrix& signs);

/// A linear extension psi of all the local orders (psi[i-1] is the rank of
/// position i), taking the smallest available position first, or nullopt if
/// the orders contain a cycle. `n` is the number of positions.
std::optional<std::vector<int>> consistency(const LocalOrders& lo, int n);

struct Point {
  double x = 0;
  double y = 0;
  bool operator==(const Point&) const = default;
};

struct Realization {
  std::vector<double> distances;  // d_1 < ... < d_n
  std::vector<Point> points;      // points[i-1] belongs to position i
};

/// Realization with d_j = j*sqrt(2)/(n+1), or nullopt if the local orders are
/// inconsistent.
std::optional<Realization> realize(const GriddedPermutation& gp, const SignedMatrix& signs);

/// Reads a generic point set drawn on m back into a gridded permutation.
/// Throws std::invalid_argument if two points share a coordinate or a point
/// lies outside the grid.
GriddedPermutation read_back(const std::vector<Point>& points, const GridMatrix& m);

using CellWord = std::vector<Cell>;

/// phi#: letter j places a point at distance d_j from its cell's base point.
/// Throws std::invalid_argument on a letter naming a zero cell.
GriddedPermutation decode_word(const CellWord& w, const SignedMatrix& signs);
/// A word decoding to gp, from the consistency extension. Throws
/// std::invalid_argument when the local orders are inconsistent.
CellWord encode_gridded(const GriddedPermutation& gp, const SignedMatrix& signs);

/// pi can be drawn on the standard figure of m.
bool geom_member(const Permutation& pi, const GridMatrix& m);
/// A gridding with consistent local orders and the signs used, if any.
std::optional<std::pair<GriddedPermutation, SignedMatrix>> geom_witness(const Permutation& pi,
                                                                        const GridMatrix& m);

/// Cell alphabet of a PMM with a decoder whose letter graphs are the
/// inversion graphs of the encoded permutations.
struct CellDecoder {
  std::vector<Cell> cells;  // letter a names cells[a]
  Alphabet alphabet;        // symbols "k.l"
  Decoder decoder;
  /// Letter of a nonzero cell; throws std::invalid_argument otherwise.
  Letter letter_of(Cell c) const;
};
CellDecoder derive_decoder(const SignedMatrix& signs);

/// Whitespace-separated "k.l" tokens.
CellWord parse_cell_word(std::string_view text);
std::string format_cell_word(const CellWord& w);

}  // namespace lettergrid
