#include "lettergrid/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lettergrid::oracle {

namespace {

using Adj = std::vector<std::vector<bool>>;

Adj adjacency(const SimpleGraph& g) {
  Adj a(g.order(), std::vector<bool>(g.order(), false));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v) a[u][v] = g.adjacent(u + 1, v + 1);
  return a;
}

std::vector<int> degree_sequence(const Adj& a) {
  std::vector<int> d;
  for (const auto& row : a) d.push_back(static_cast<int>(std::count(row.begin(), row.end(), true)));
  std::sort(d.begin(), d.end());
  return d;
}

bool isomorphic_adj(const Adj& a, const Adj& b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = a[u][v] == b[f[u]][f[v]];
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

}  // namespace

bool isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() > 8 || h.order() > 8) throw std::invalid_argument("oracle isomorphism is capped at order 8");
  return isomorphic_adj(adjacency(g), adjacency(h));
}

int lettericity(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 8) throw std::invalid_argument("oracle lettericity is capped at order 8");
  if (n == 0) return 0;
  const Adj target = adjacency(g);
  const auto target_degrees = degree_sequence(target);
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<int>> renamings;
    std::vector<int> r(k);
    std::iota(r.begin(), r.end(), 0);
    do renamings.push_back(r);
    while (std::next_permutation(r.begin(), r.end()));

    const unsigned long masks = 1ul << (k * k);
    for (unsigned long mask = 0; mask < masks; ++mask) {
      auto in = [&](unsigned long msk, int a, int b) { return (msk >> (a * k + b)) & 1ul; };
      bool least = true;
      for (const auto& ren : renamings) {
        unsigned long other = 0;
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b)
            if (in(mask, a, b)) other |= 1ul << (ren[a] * k + ren[b]);
        if (other < mask) {
          least = false;
          break;
        }
      }
      if (!least) continue;
      std::vector<int> word(n, 0);
      while (true) {
        Adj a(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (in(mask, word[i], word[j])) a[i][j] = a[j][i] = true;
        if (degree_sequence(a) == target_degrees && isomorphic_adj(a, target)) return k;
        int p = n - 1;
        while (p >= 0 && word[p] == k - 1) word[p--] = 0;
        if (p < 0) break;
        ++word[p];
      }
    }
  }
  return n;
}

namespace {

using Matrix = std::vector<std::vector<int>>;  // [k-1][l-1]

Matrix as_matrix(const GridMatrix& m) {
  Matrix out(m.cols(), std::vector<int>(m.rows()));
  for (int k = 1; k <= m.cols(); ++k)
    for (int l = 1; l <= m.rows(); ++l) out[k - 1][l - 1] = m.at(k, l);
  return out;
}

Matrix double_up(const Matrix& m) {
  const int t = static_cast<int>(m.size());
  const int u = t == 0 ? 0 : static_cast<int>(m[0].size());
  Matrix d(2 * t, std::vector<int>(2 * u, 0));
  for (int k = 0; k < t; ++k)
    for (int l = 0; l < u; ++l) {
      if (m[k][l] == 1) d[2 * k][2 * l] = d[2 * k + 1][2 * l + 1] = 1;
      if (m[k][l] == -1) d[2 * k][2 * l + 1] = d[2 * k + 1][2 * l] = -1;
    }
  return d;
}

struct Signs {
  std::vector<int> c, r;
};

std::vector<Signs> valid_signs(const Matrix& m) {
  const int t = static_cast<int>(m.size());
  const int u = t == 0 ? 0 : static_cast<int>(m[0].size());
  if (t + u > 24) throw std::invalid_argument("oracle sign enumeration is capped at 24 lines");
  std::vector<Signs> out;
  for (unsigned long bits = 0; bits < (1ul << (t + u)); ++bits) {
    Signs s;
    for (int k = 0; k < t; ++k) s.c.push_back((bits >> k & 1) ? -1 : 1);
    for (int l = 0; l < u; ++l) s.r.push_back((bits >> (t + l) & 1) ? -1 : 1);
    bool ok = true;
    for (int k = 0; k < t && ok; ++k)
      for (int l = 0; l < u && ok; ++l) ok = m[k][l] == 0 || m[k][l] == s.c[k] * s.r[l];
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

// Directed graph on 1..n has a cycle (three-colour depth-first search).
bool has_cycle(const std::vector<std::vector<int>>& out_edges) {
  const int n = static_cast<int>(out_edges.size()) - 1;
  std::vector<int> colour(n + 1, 0);
  std::vector<std::pair<int, std::size_t>> stack;
  for (int s = 1; s <= n; ++s) {
    if (colour[s]) continue;
    stack.push_back({s, 0});
    colour[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out_edges[v].size()) {
        const int w = out_edges[v][next++];
        if (colour[w] == 1) return true;
        if (colour[w] == 0) {
          colour[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        colour[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

struct GeomSearch {
  const std::vector<int>& p;  // p[i-1] = pi(i)
  const Matrix& m;
  const std::vector<Signs>& signs;
  int n, t, u;
  std::vector<int> x, y;  // divisions, x[0] = 1, x[t] = n + 1

  int column_of(int i) const {
    int k = 0;
    while (k + 1 < t && x[k + 1] <= i) ++k;
    return k;
  }

  // Cells of row l follow the matrix.
  bool row_fine(int l) const {
    for (int k = 0; k < t; ++k) {
      int prev = 0;
      for (int i = x[k]; i < x[k + 1]; ++i) {
        const int v = p[i - 1];
        if (v < y[l] || v >= y[l + 1]) continue;
        if (m[k][l] == 0) return false;
        if (prev && ((m[k][l] == 1) != (v > prev))) return false;
        prev = v;
      }
    }
    return true;
  }

  bool some_sign_acyclic() const {
    for (const auto& s : signs) {
      std::vector<std::vector<int>> edges(n + 1);
      for (int k = 0; k < t; ++k) {
        std::vector<int> col;
        for (int i = x[k]; i < x[k + 1]; ++i) col.push_back(i);
        if (s.c[k] == -1) std::reverse(col.begin(), col.end());
        for (std::size_t j = 0; j + 1 < col.size(); ++j) edges[col[j]].push_back(col[j + 1]);
      }
      for (int l = 0; l < u; ++l) {
        std::vector<std::pair<int, int>> row;  // (value, index)
        for (int i = 1; i <= n; ++i)
          if (p[i - 1] >= y[l] && p[i - 1] < y[l + 1]) row.push_back({p[i - 1], i});
        std::sort(row.begin(), row.end());
        if (s.r[l] == -1) std::reverse(row.begin(), row.end());
        for (std::size_t j = 0; j + 1 < row.size(); ++j) edges[row[j].second].push_back(row[j + 1].second);
      }
      if (!has_cycle(edges)) return true;
    }
    return false;
  }

  bool rows_from(int l) {
    if (l == u - 1) {
      y[u] = n + 1;
      return row_fine(l) && some_sign_acyclic();
    }
    for (int v = y[l]; v <= n + 1; ++v) {
      y[l + 1] = v;
      if (row_fine(l) && rows_from(l + 1)) return true;
    }
    return false;
  }

  bool cols_from(int k) {
    if (k == t - 1) {
      x[t] = n + 1;
      return rows_from(0);
    }
    for (int v = x[k]; v <= n + 1; ++v) {
      x[k + 1] = v;
      if (cols_from(k + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool geom_member(const Permutation& pi, const GridMatrix& gm) {
  if (pi.size() > 8) throw std::invalid_argument("oracle geometric membership is capped at length 8");
  Matrix m = as_matrix(gm);
  auto signs = valid_signs(m);
  if (signs.empty()) {
    m = double_up(m);
    signs = valid_signs(m);
  }
  const int n = pi.size();
  const int t = static_cast<int>(m.size());
  const int u = t == 0 ? 0 : static_cast<int>(m[0].size());
  if (n == 0) return true;
  if (t == 0 || u == 0) return false;
  GeomSearch s{pi.values(), m, signs, n, t, u, std::vector<int>(t + 1, 1), std::vector<int>(u + 1, 1)};
  return s.cols_from(0);
}

bool contains(const Permutation& pi, const Permutation& sigma) {
  const int n = pi.size();
  const int k = sigma.size();
  if (n > 16) throw std::invalid_argument("oracle containment is capped at length 16");
  if (k > n) return false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> picked;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) picked.push_back(pi(i + 1));
    bool same = true;
    for (int a = 0; a < k && same; ++a)
      for (int b = a + 1; b < k && same; ++b) same = (picked[a] < picked[b]) == (sigma(a + 1) < sigma(b + 1));
    if (same) return true;
  }
  return false;
}

}  // namespace lettergrid::oracle
