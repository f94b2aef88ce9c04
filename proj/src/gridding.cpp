#include "lettergrid/gridding.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "lettergrid/error.hpp"
#include "text_util.hpp"

namespace lettergrid {

GridMatrix::GridMatrix(int cols, int rows)
    : t_(cols), u_(rows), entries_(static_cast<std::size_t>(std::max(cols, 0)) * std::max(rows, 0), 0) {
  if (cols < 0 || rows < 0) throw std::invalid_argument("matrix dimensions must be non-negative");
}

GridMatrix GridMatrix::from_display(const std::vector<std::vector<int>>& display) {
  const int u = static_cast<int>(display.size());
  const int t = u == 0 ? 0 : static_cast<int>(display[0].size());
  GridMatrix m(t, u);
  for (int r = 0; r < u; ++r) {
    if (static_cast<int>(display[r].size()) != t) throw std::invalid_argument("ragged matrix rows");
    for (int k = 1; k <= t; ++k) m.set(k, u - r, display[r][k - 1]);
  }
  return m;
}

std::size_t GridMatrix::index(int k, int l) const {
  if (k < 1 || k > t_ || l < 1 || l > u_) {
    throw std::out_of_range("cell (" + std::to_string(k) + "," + std::to_string(l) + ") out of range");
  }
  return static_cast<std::size_t>(k - 1) * u_ + (l - 1);
}

void GridMatrix::set(int k, int l, int value) {
  if (value < -1 || value > 1) throw std::invalid_argument("matrix entries must be -1, 0 or 1");
  entries_[index(k, l)] = value;
}

bool GridMatrix::column_empty(int k) const {
  for (int l = 1; l <= u_; ++l)
    if (at(k, l) != 0) return false;
  return true;
}

bool GridMatrix::row_empty(int l) const {
  for (int k = 1; k <= t_; ++k)
    if (at(k, l) != 0) return false;
  return true;
}

std::vector<Cell> GridMatrix::nonzero_cells() const {
  std::vector<Cell> out;
  for (int k = 1; k <= t_; ++k)
    for (int l = 1; l <= u_; ++l)
      if (at(k, l) != 0) out.emplace_back(k, l);
  return out;
}

std::vector<std::vector<int>> GridMatrix::display() const {
  std::vector<std::vector<int>> out;
  for (int l = u_; l >= 1; --l) {
    std::vector<int> row;
    for (int k = 1; k <= t_; ++k) row.push_back(at(k, l));
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

// Cells of rows first_row..last_row are monotone as the matrix demands.
bool rows_ok(const Permutation& pi, const GridMatrix& m, const std::vector<int>& col_of,
             const std::vector<int>& y, int first_row, int last_row) {
  for (int l = first_row; l <= last_row; ++l) {
    std::vector<int> last(m.cols() + 1, 0);
    for (int i = 1; i <= pi.size(); ++i) {
      const int v = pi(i);
      if (v < y[l - 1] || v >= y[l]) continue;
      const int k = col_of[i];
      const int sign = m.at(k, l);
      if (sign == 0) return false;
      if (last[k] != 0 && (sign == 1 ? v < last[k] : v > last[k])) return false;
      last[k] = v;
    }
  }
  return true;
}

}  // namespace

void for_each_gridding(const Permutation& pi, const GridMatrix& m,
                       const std::function<bool(const GriddedPermutation&)>& visit) {
  const int n = pi.size();
  const int t = m.cols();
  const int u = m.rows();
  if (t == 0 || u == 0) {
    if (n == 0) visit(GriddedPermutation{pi, m, std::vector<int>(t + 1, 1), std::vector<int>(u + 1, 1)});
    return;
  }
  std::vector<int> x(t + 1, 1), y(u + 1, 1);
  x[t] = n + 1;
  y[u] = n + 1;
  std::vector<int> col_of(n + 1, 0);
  bool stop = false;

  std::function<void(int)> choose_row = [&](int l) {
    if (stop) return;
    if (l == u) {
      if (!rows_ok(pi, m, col_of, y, u, u)) return;
      if (!visit(GriddedPermutation{pi, m, x, y})) stop = true;
      return;
    }
    for (int v = y[l - 1]; v <= n + 1 && !stop; ++v) {
      y[l] = v;
      if (rows_ok(pi, m, col_of, y, l, l)) choose_row(l + 1);
    }
  };

  std::function<void(int)> choose_col = [&](int k) {
    if (stop) return;
    if (k == t) {
      if (m.column_empty(t) && x[t - 1] != x[t]) return;
      for (int c = 1; c <= t; ++c)
        for (int i = x[c - 1]; i < x[c]; ++i) col_of[i] = c;
      choose_row(1);
      return;
    }
    for (int p = x[k - 1]; p <= n + 1 && !stop; ++p) {
      if (m.column_empty(k) && p != x[k - 1]) break;
      x[k] = p;
      choose_col(k + 1);
    }
  };
  choose_col(1);
}

Cell GriddedPermutation::cell_of(int i) const {
  if (i < 1 || i > perm.size()) throw std::out_of_range("position out of range");
  const int k = static_cast<int>(std::upper_bound(col_divs.begin(), col_divs.end(), i) - col_divs.begin());
  const int l = static_cast<int>(std::upper_bound(row_divs.begin(), row_divs.end(), perm(i)) - row_divs.begin());
  return {k, l};
}

bool GriddedPermutation::valid() const {
  const int n = perm.size();
  auto shape_ok = [n](const std::vector<int>& d, int count) {
    if (static_cast<int>(d.size()) != count + 1) return false;
    if (d.front() != 1 || d.back() != n + 1) return false;
    return std::is_sorted(d.begin(), d.end());
  };
  if (!shape_ok(col_divs, matrix.cols()) || !shape_ok(row_divs, matrix.rows())) return false;
  if (n == 0) return true;
  if (matrix.cols() == 0 || matrix.rows() == 0) return false;
  std::vector<int> col_of(n + 1);
  for (int i = 1; i <= n; ++i) col_of[i] = cell_of(i).first;
  return rows_ok(perm, matrix, col_of, row_divs, 1, matrix.rows());
}

std::vector<int> GriddedPermutation::entries_in(int k, int l) const {
  std::vector<int> out;
  for (int i = 1; i <= perm.size(); ++i)
    if (cell_of(i) == Cell{k, l}) out.push_back(i);
  return out;
}

bool SignedMatrix::valid() const {
  if (static_cast<int>(col_signs.size()) != matrix.cols() || static_cast<int>(row_signs.size()) != matrix.rows()) {
    return false;
  }
  for (int s : col_signs)
    if (s != 1 && s != -1) return false;
  for (int s : row_signs)
    if (s != 1 && s != -1) return false;
  for (int k = 1; k <= matrix.cols(); ++k)
    for (int l = 1; l <= matrix.rows(); ++l)
      if (matrix.at(k, l) != 0 && matrix.at(k, l) != col_signs[k - 1] * row_signs[l - 1]) return false;
  return true;
}

std::optional<GriddedPermutation> find_gridding(const Permutation& pi, const GridMatrix& m) {
  std::optional<GriddedPermutation> found;
  for_each_gridding(pi, m, [&](const GriddedPermutation& g) {
    found = g;
    return false;
  });
  return found;
}

std::vector<GriddedPermutation> all_griddings(const Permutation& pi, const GridMatrix& m) {
  std::vector<GriddedPermutation> out;
  for_each_gridding(pi, m, [&](const GriddedPermutation& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

bool is_skew_merged(const Permutation& pi) {
  static const Permutation p2143{2, 1, 4, 3};
  static const Permutation p3412{3, 4, 1, 2};
  return !contains(pi, p2143) && !contains(pi, p3412);
}

Permutation matching_pattern(int m, bool reverse) {
  std::vector<int> v;
  if (!reverse) {
    for (int j = 1; j <= m; ++j) {
      v.push_back(2 * j);
      v.push_back(2 * j - 1);
    }
  } else {
    for (int j = m; j >= 1; --j) {
      v.push_back(2 * j - 1);
      v.push_back(2 * j);
    }
  }
  return Permutation(std::move(v));
}

MatchingWitness matching_pattern_witness(const Permutation& pi) {
  MatchingWitness w;
  while (2 * (w.m + 1) <= pi.size() && contains(pi, matching_pattern(w.m + 1))) ++w.m;
  while (2 * (w.m_reverse + 1) <= pi.size() && contains(pi, matching_pattern(w.m_reverse + 1, true))) ++w.m_reverse;
  return w;
}

namespace {

struct SignComponents {
  // Component id of each column (0..t-1) and row (t..t+u-1).
  std::vector<int> of;
  int count = 0;
};

SignComponents sign_components(const GridMatrix& m) {
  const int t = m.cols();
  const int u = m.rows();
  SignComponents c{std::vector<int>(t + u, -1), 0};
  for (int start = 0; start < t + u; ++start) {
    if (c.of[start] >= 0) continue;
    std::vector<int> stack{start};
    c.of[start] = c.count;
    while (!stack.empty()) {
      const int node = stack.back();
      stack.pop_back();
      const bool is_col = node < t;
      const int lim = is_col ? u : t;
      for (int j = 0; j < lim; ++j) {
        const int k = is_col ? node + 1 : j + 1;
        const int l = is_col ? j + 1 : node - t + 1;
        const int other = is_col ? t + j : j;
        if (m.at(k, l) != 0 && c.of[other] < 0) {
          c.of[other] = c.count;
          stack.push_back(other);
        }
      }
    }
    ++c.count;
  }
  return c;
}

}  // namespace

std::optional<SignedMatrix> pmm_signs(const GridMatrix& m) {
  const int t = m.cols();
  const int u = m.rows();
  SignedMatrix s{m, std::vector<int>(t, 0), std::vector<int>(u, 0)};
  // Columns are visited first, so a component's least column is its root.
  for (int root = 0; root < t + u; ++root) {
    const bool root_col = root < t;
    if ((root_col ? s.col_signs[root] : s.row_signs[root - t]) != 0) continue;
    (root_col ? s.col_signs[root] : s.row_signs[root - t]) = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int node = stack.back();
      stack.pop_back();
      const bool is_col = node < t;
      const int sign = is_col ? s.col_signs[node] : s.row_signs[node - t];
      const int lim = is_col ? u : t;
      for (int j = 0; j < lim; ++j) {
        const int k = is_col ? node + 1 : j + 1;
        const int l = is_col ? j + 1 : node - t + 1;
        const int e = m.at(k, l);
        if (e == 0) continue;
        int& other = is_col ? s.row_signs[j] : s.col_signs[j];
        const int want = e * sign;
        if (other == 0) {
          other = want;
          stack.push_back(is_col ? t + j : j);
        } else if (other != want) {
          return std::nullopt;
        }
      }
    }
  }
  return s;
}

std::vector<SignedMatrix> all_pmm_signs(const GridMatrix& m) {
  auto base = pmm_signs(m);
  if (!base) return {};
  const auto comps = sign_components(m);
  if (comps.count > 20) throw std::invalid_argument("too many sign components to enumerate");
  std::vector<SignedMatrix> out;
  const int t = m.cols();
  for (unsigned long mask = 0; mask < (1ul << comps.count); ++mask) {
    SignedMatrix s = *base;
    for (int k = 0; k < t; ++k)
      if (mask >> comps.of[k] & 1) s.col_signs[k] = -s.col_signs[k];
    for (int l = 0; l < m.rows(); ++l)
      if (mask >> comps.of[t + l] & 1) s.row_signs[l] = -s.row_signs[l];
    out.push_back(std::move(s));
  }
  return out;
}

GridMatrix doubled(const GridMatrix& m) {
  GridMatrix d(2 * m.cols(), 2 * m.rows());
  for (int k = 1; k <= m.cols(); ++k) {
    for (int l = 1; l <= m.rows(); ++l) {
      const int e = m.at(k, l);
      if (e == 1) {
        d.set(2 * k - 1, 2 * l - 1, 1);
        d.set(2 * k, 2 * l, 1);
      } else if (e == -1) {
        d.set(2 * k - 1, 2 * l, -1);
        d.set(2 * k, 2 * l - 1, -1);
      }
    }
  }
  return d;
}

SignedMatrix doubled_signs(const GridMatrix& doubled_matrix) {
  SignedMatrix s{doubled_matrix, {}, {}};
  for (int k = 1; k <= doubled_matrix.cols(); ++k) s.col_signs.push_back(k % 2 == 0 ? 1 : -1);
  for (int l = 1; l <= doubled_matrix.rows(); ++l) s.row_signs.push_back(l % 2 == 0 ? 1 : -1);
  if (!s.valid()) throw std::invalid_argument("matrix is not of the doubled form");
  return s;
}

GridMatrix universal_matrix(int t, int u) {
  if (t < 1 || u < 1) throw std::invalid_argument("universal_matrix needs t, u >= 1");
  GridMatrix s(2 * t, 2 * u);
  for (int k = 1; k <= 2 * t; ++k)
    for (int l = 1; l <= 2 * u; ++l) s.set(k, l, (k + l) % 2 == 1 ? 1 : -1);
  return s;
}

GridMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<int>> display;
  for (auto line : detail::split_lines(text)) {
    if (detail::blank(line)) continue;
    std::vector<int> row;
    for (auto tok : detail::tokens(line, /*commas=*/true)) {
      const int e = detail::parse_int(tok, "matrix entry");
      if (e < -1 || e > 1) throw ParseError("matrix: entries must be -1, 0 or 1, got '" + std::string(tok) + "'");
      row.push_back(e);
    }
    if (!display.empty() && row.size() != display.front().size()) {
      throw ParseError("matrix: all rows must have the same length");
    }
    display.push_back(std::move(row));
  }
  if (display.empty()) throw ParseError("matrix: no rows");
  return GridMatrix::from_display(display);
}

std::string format_matrix(const GridMatrix& m) {
  std::string s;
  for (const auto& row : m.display()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(row[k]);
    }
    s += '\n';
  }
  return s;
}

}  // namespace lettergrid
