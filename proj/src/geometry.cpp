#include "lettergrid/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "lettergrid/error.hpp"
#include "text_util.hpp"

namespace lettergrid {

std::vector<Segment> standard_figure(const GridMatrix& m) {
  std::vector<Segment> out;
  for (auto [k, l] : m.nonzero_cells()) {
    if (m.at(k, l) == 1) {
      out.push_back({{k, l}, double(k - 1), double(l - 1), double(k), double(l)});
    } else {
      out.push_back({{k, l}, double(k - 1), double(l), double(k), double(l - 1)});
    }
  }
  return out;
}

std::pair<double, double> base_point(const SignedMatrix& signs, int k, int l) {
  const double x = signs.col_signs.at(k - 1) == 1 ? k - 1 : k;
  const double y = signs.row_signs.at(l - 1) == 1 ? l - 1 : l;
  return {x, y};
}

LocalOrders local_orders(const GriddedPermutation& gp, const SignedMatrix& signs) {
  if (!(gp.matrix == signs.matrix)) throw std::invalid_argument("gridding and signs use different matrices");
  if (!signs.valid()) throw std::invalid_argument("signs do not factor the matrix");
  const int t = gp.matrix.cols();
  const int u = gp.matrix.rows();
  LocalOrders lo{std::vector<std::vector<int>>(t), std::vector<std::vector<int>>(u)};
  for (int k = 1; k <= t; ++k) {
    for (int i = gp.col_divs[k - 1]; i < gp.col_divs[k]; ++i) lo.column_orders[k - 1].push_back(i);
    if (signs.col_signs[k - 1] == -1) std::reverse(lo.column_orders[k - 1].begin(), lo.column_orders[k - 1].end());
  }
  const auto inv = gp.perm.inverse();
  for (int l = 1; l <= u; ++l) {
    for (int v = gp.row_divs[l - 1]; v < gp.row_divs[l]; ++v) lo.row_orders[l - 1].push_back(inv(v));
    if (signs.row_signs[l - 1] == -1) std::reverse(lo.row_orders[l - 1].begin(), lo.row_orders[l - 1].end());
  }
  return lo;
}

std::optional<std::vector<int>> consistency(const LocalOrders& lo, int n) {
  std::vector<std::vector<int>> succ(n + 1);
  std::vector<int> indegree(n + 1, 0);
  auto add_chains = [&](const std::vector<std::vector<int>>& chains) {
    for (const auto& chain : chains) {
      for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        if (chain[j] < 1 || chain[j] > n || chain[j + 1] < 1 || chain[j + 1] > n) {
          throw std::out_of_range("local order mentions a position outside 1..n");
        }
        succ[chain[j]].push_back(chain[j + 1]);
        ++indegree[chain[j + 1]];
      }
    }
  };
  add_chains(lo.column_orders);
  add_chains(lo.row_orders);
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int i = 1; i <= n; ++i)
    if (indegree[i] == 0) ready.push(i);
  std::vector<int> psi(n, 0);
  int rank = 0;
  while (!ready.empty()) {
    const int i = ready.top();
    ready.pop();
    psi[i - 1] = ++rank;
    for (int j : succ[i])
      if (--indegree[j] == 0) ready.push(j);
  }
  if (rank != n) return std::nullopt;
  return psi;
}

namespace {

Point place(const SignedMatrix& signs, Cell c, double s) {
  auto [bx, by] = base_point(signs, c.first, c.second);
  return {bx + signs.col_signs[c.first - 1] * s, by + signs.row_signs[c.second - 1] * s};
}

}  // namespace

std::optional<Realization> realize(const GriddedPermutation& gp, const SignedMatrix& signs) {
  const int n = gp.perm.size();
  auto psi = consistency(local_orders(gp, signs), n);
  if (!psi) return std::nullopt;
  Realization r;
  for (int j = 1; j <= n; ++j) r.distances.push_back(j * std::sqrt(2.0) / (n + 1));
  for (int i = 1; i <= n; ++i) {
    r.points.push_back(place(signs, gp.cell_of(i), static_cast<double>((*psi)[i - 1]) / (n + 1)));
  }
  return r;
}

GriddedPermutation read_back(const std::vector<Point>& points, const GridMatrix& m) {
  const int n = static_cast<int>(points.size());
  const int t = m.cols();
  const int u = m.rows();
  std::vector<int> by_x(n), by_y(n);
  std::iota(by_x.begin(), by_x.end(), 0);
  std::iota(by_y.begin(), by_y.end(), 0);
  std::sort(by_x.begin(), by_x.end(), [&](int a, int b) { return points[a].x < points[b].x; });
  std::sort(by_y.begin(), by_y.end(), [&](int a, int b) { return points[a].y < points[b].y; });
  for (int j = 0; j + 1 < n; ++j) {
    if (points[by_x[j]].x == points[by_x[j + 1]].x || points[by_y[j]].y == points[by_y[j + 1]].y) {
      throw std::invalid_argument("point set is not generic");
    }
  }
  std::vector<int> rank_y(n);
  for (int j = 0; j < n; ++j) rank_y[by_y[j]] = j + 1;
  std::vector<int> values;
  std::vector<int> col_count(t + 1, 0), row_count(u + 1, 0);
  for (int j = 0; j < n; ++j) {
    const Point& p = points[by_x[j]];
    if (p.x <= 0 || p.x >= t || p.y <= 0 || p.y >= u) throw std::invalid_argument("point outside the grid");
    values.push_back(rank_y[by_x[j]]);
    ++col_count[static_cast<int>(std::floor(p.x)) + 1];
    ++row_count[static_cast<int>(std::floor(p.y)) + 1];
  }
  GriddedPermutation gp{Permutation(std::move(values)), m, std::vector<int>(t + 1, 1), std::vector<int>(u + 1, 1)};
  for (int k = 1; k <= t; ++k) gp.col_divs[k] = gp.col_divs[k - 1] + col_count[k];
  for (int l = 1; l <= u; ++l) gp.row_divs[l] = gp.row_divs[l - 1] + row_count[l];
  return gp;
}

GriddedPermutation decode_word(const CellWord& w, const SignedMatrix& signs) {
  if (!signs.valid()) throw std::invalid_argument("signs do not factor the matrix");
  const int n = static_cast<int>(w.size());
  std::vector<Point> points;
  for (int j = 1; j <= n; ++j) {
    auto [k, l] = w[j - 1];
    if (k < 1 || k > signs.matrix.cols() || l < 1 || l > signs.matrix.rows() || signs.matrix.at(k, l) == 0) {
      throw std::invalid_argument("letter " + std::to_string(k) + "." + std::to_string(l) + " names no nonzero cell");
    }
    points.push_back(place(signs, w[j - 1], static_cast<double>(j) / (n + 1)));
  }
  return read_back(points, signs.matrix);
}

CellWord encode_gridded(const GriddedPermutation& gp, const SignedMatrix& signs) {
  const int n = gp.perm.size();
  auto psi = consistency(local_orders(gp, signs), n);
  if (!psi) throw std::invalid_argument("local orders are inconsistent");
  CellWord w(n);
  for (int i = 1; i <= n; ++i) w[(*psi)[i - 1] - 1] = gp.cell_of(i);
  return w;
}

std::optional<std::pair<GriddedPermutation, SignedMatrix>> geom_witness(const Permutation& pi,
                                                                        const GridMatrix& m) {
  std::vector<SignedMatrix> sign_choices = all_pmm_signs(m);
  const GridMatrix target = sign_choices.empty() ? doubled(m) : m;
  if (sign_choices.empty()) sign_choices = all_pmm_signs(target);
  std::optional<std::pair<GriddedPermutation, SignedMatrix>> found;
  for_each_gridding(pi, target, [&](const GriddedPermutation& gp) {
    for (const auto& s : sign_choices) {
      if (consistency(local_orders(gp, s), pi.size())) {
        found.emplace(gp, s);
        return false;
      }
    }
    return true;
  });
  return found;
}

bool geom_member(const Permutation& pi, const GridMatrix& m) { return geom_witness(pi, m).has_value(); }

Letter CellDecoder::letter_of(Cell c) const {
  auto it = std::find(cells.begin(), cells.end(), c);
  if (it == cells.end()) throw std::invalid_argument("cell is not in the cell alphabet");
  return static_cast<Letter>(it - cells.begin());
}

CellDecoder derive_decoder(const SignedMatrix& signs) {
  if (!signs.valid()) throw std::invalid_argument("signs do not factor the matrix");
  CellDecoder cd;
  cd.cells = signs.matrix.nonzero_cells();
  std::vector<std::string> symbols;
  for (auto [k, l] : cd.cells) symbols.push_back(std::to_string(k) + "." + std::to_string(l));
  cd.alphabet = Alphabet(std::move(symbols));
  const int size = static_cast<int>(cd.cells.size());
  cd.decoder = Decoder(size);
  for (int a = 0; a < size; ++a) {
    auto [k, l] = cd.cells[a];
    for (int b = 0; b < size; ++b) {
      auto [k2, l2] = cd.cells[b];
      bool in = false;
      if (a == b) {
        in = signs.matrix.at(k, l) == -1;
      } else if (k == k2) {
        // a is the upper cell: (upper, lower) for an increasing column sign.
        in = (l > l2) == (signs.col_signs[k - 1] == 1);
      } else if (l == l2) {
        // a is the right cell: (right, left) for an increasing row sign.
        in = (k > k2) == (signs.row_signs[l - 1] == 1);
      } else {
        in = (k < k2) == (l > l2);
      }
      if (in) cd.decoder.insert(a, b);
    }
  }
  return cd;
}

CellWord parse_cell_word(std::string_view text) {
  CellWord w;
  for (auto tok : detail::tokens(text)) {
    const auto dot = tok.find('.');
    if (dot == std::string_view::npos) throw ParseError("cell word: expected 'k.l', got '" + std::string(tok) + "'");
    const int k = detail::parse_int(tok.substr(0, dot), "cell word column");
    const int l = detail::parse_int(tok.substr(dot + 1), "cell word row");
    if (k < 1 || l < 1) throw ParseError("cell word: cells are numbered from 1, got '" + std::string(tok) + "'");
    w.emplace_back(k, l);
  }
  return w;
}

std::string format_cell_word(const CellWord& w) {
  std::string s;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j) s += ' ';
    s += std::to_string(w[j].first) + "." + std::to_string(w[j].second);
  }
  return s;
}

}  // namespace lettergrid
