#include "lettergrid/graphs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "lettergrid/error.hpp"
#include "text_util.hpp"

namespace lettergrid {

SimpleGraph::SimpleGraph(int order) : n_(order), adj_(static_cast<std::size_t>(order) * order, 0) {
  if (order < 0) throw std::invalid_argument("graph order must be non-negative");
}

SimpleGraph::SimpleGraph(int order, std::span<const Edge> edges) : SimpleGraph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::check_vertex(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

bool SimpleGraph::adjacent(int u, int v) const {
  return adj_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)] != 0;
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)] = 1;
  adj_[static_cast<std::size_t>(v - 1) * n_ + (u - 1)] = 1;
}

void SimpleGraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)] = 0;
  adj_[static_cast<std::size_t>(v - 1) * n_ + (u - 1)] = 0;
}

int SimpleGraph::degree(int v) const {
  int d = 0;
  for (int u = 1; u <= n_; ++u) d += adjacent(v, u);
  return d;
}

int SimpleGraph::edge_count() const {
  int m = 0;
  for (int u = 1; u <= n_; ++u)
    for (int v = u + 1; v <= n_; ++v) m += adjacent(u, v);
  return m;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= n_; ++u)
    for (int v = u + 1; v <= n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph h(g.order());
  for (int u = 1; u <= g.order(); ++u)
    for (int v = u + 1; v <= g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> vertices) {
  for (int v : vertices) {
    if (v < 1 || v > g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  const int k = static_cast<int>(vertices.size());
  SimpleGraph h(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (vertices[a] != vertices[b] && g.adjacent(vertices[a], vertices[b])) h.add_edge(a + 1, b + 1);
  return h;
}

namespace {

// Degree plus the sorted degrees of the neighbours; preserved by isomorphisms.
std::vector<std::vector<int>> vertex_signatures(const SimpleGraph& g) {
  std::vector<std::vector<int>> sig(g.order());
  for (int v = 1; v <= g.order(); ++v) {
    std::vector<int> nd;
    for (int u = 1; u <= g.order(); ++u)
      if (g.adjacent(u, v)) nd.push_back(g.degree(u));
    std::sort(nd.begin(), nd.end());
    sig[v - 1].push_back(static_cast<int>(nd.size()));
    sig[v - 1].insert(sig[v - 1].end(), nd.begin(), nd.end());
  }
  return sig;
}

struct IsoSearch {
  const SimpleGraph& g;
  const SimpleGraph& h;
  std::vector<std::vector<int>> sig_g, sig_h;
  std::vector<int> order;  // vertices of g in assignment order
  std::vector<int> image;  // image[v-1], 0 when unassigned
  std::vector<bool> used;

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 1; w <= h.order(); ++w) {
      if (used[w - 1] || sig_g[v - 1] != sig_h[w - 1]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int u = order[d];
        ok = g.adjacent(u, v) == h.adjacent(image[u - 1], w);
      }
      if (!ok) continue;
      image[v - 1] = w;
      used[w - 1] = true;
      if (run(depth + 1)) return true;
      used[w - 1] = false;
      image[v - 1] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  IsoSearch s{g, h, vertex_signatures(g), vertex_signatures(h), {}, std::vector<int>(g.order(), 0),
              std::vector<bool>(h.order(), false)};
  auto a = s.sig_g, b = s.sig_h;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;
  // Connected-first order: each next vertex is adjacent to as many placed ones as possible.
  std::vector<bool> placed(g.order(), false);
  for (int step = 0; step < g.order(); ++step) {
    int best = 0, best_links = -1;
    for (int v = 1; v <= g.order(); ++v) {
      if (placed[v - 1]) continue;
      int links = 0;
      for (int u : s.order) links += g.adjacent(u, v);
      const int score = links * (g.order() + 1) + g.degree(v);
      if (score > best_links) {
        best_links = score;
        best = v;
      }
    }
    placed[best - 1] = true;
    s.order.push_back(best);
  }
  if (!s.run(0)) return std::nullopt;
  return s.image;
}

bool has_induced(const SimpleGraph& g, const SimpleGraph& h) {
  const int k = h.order();
  const int n = g.order();
  if (k > n) return false;
  if (k == 0) return true;
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 1);
  while (true) {
    if (is_isomorphic(induced_subgraph(g, subset), h)) return true;
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i + 1) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

SimpleGraph family(Family kind, int size) {
  if (size < 1) throw std::invalid_argument("family size must be at least 1");
  switch (kind) {
    case Family::matching: {
      SimpleGraph g(2 * size);
      for (int i = 1; i <= size; ++i) g.add_edge(2 * i - 1, 2 * i);
      return g;
    }
    case Family::co_matching:
      return complement(family(Family::matching, size));
    case Family::path: {
      SimpleGraph g(size);
      for (int i = 1; i < size; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case Family::cycle: {
      if (size < 3) throw std::invalid_argument("cycles need at least 3 vertices");
      SimpleGraph g = family(Family::path, size);
      g.add_edge(size, 1);
      return g;
    }
    case Family::complete:
      return complement(SimpleGraph(size));
    case Family::empty:
      return SimpleGraph(size);
  }
  throw std::invalid_argument("unknown family");
}

bool is_threshold(const SimpleGraph& g) {
  static const SimpleGraph two_k2 = family(Family::matching, 2);
  static const SimpleGraph c4 = family(Family::cycle, 4);
  static const SimpleGraph p4 = family(Family::path, 4);
  return !has_induced(g, two_k2) && !has_induced(g, c4) && !has_induced(g, p4);
}

bool is_split(const SimpleGraph& g) {
  static const SimpleGraph two_k2 = family(Family::matching, 2);
  static const SimpleGraph c4 = family(Family::cycle, 4);
  static const SimpleGraph c5 = family(Family::cycle, 5);
  return !has_induced(g, two_k2) && !has_induced(g, c4) && !has_induced(g, c5);
}

std::uint64_t canonical_code(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 11) throw std::invalid_argument("canonical_code supports order <= 11");
  // Group vertices by signature; only orderings that list the groups in
  // signature order are tried, which every isomorphism respects.
  auto sig = vertex_signatures(g);
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 1);
  std::sort(verts.begin(), verts.end(), [&](int a, int b) {
    return sig[a - 1] != sig[b - 1] ? sig[a - 1] < sig[b - 1] : a < b;
  });
  std::vector<std::pair<int, int>> groups;  // [begin, end) into verts
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && sig[verts[j] - 1] == sig[verts[i] - 1]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  auto code_of = [&]() {
    std::uint64_t code = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) code = (code << 1) | (g.adjacent(verts[a], verts[b]) ? 1u : 0u);
    return code;
  };
  // Odometer over the permutations of every group.
  std::function<void(std::size_t)> walk = [&](std::size_t gi) {
    if (gi == groups.size()) {
      best = std::min(best, code_of());
      return;
    }
    auto [b, e] = groups[gi];
    std::sort(verts.begin() + b, verts.begin() + e);
    do {
      walk(gi + 1);
    } while (std::next_permutation(verts.begin() + b, verts.begin() + e));
  };
  walk(0);
  return (best << 4) | static_cast<std::uint64_t>(n);
}

SimpleGraph parse_graph(std::string_view text) {
  auto lines = detail::split_lines(text);
  std::size_t li = 0;
  while (li < lines.size() && detail::blank(lines[li])) ++li;
  if (li == lines.size()) throw ParseError("graph: missing vertex count");
  auto head = detail::tokens(lines[li]);
  if (head.size() != 1) throw ParseError("graph: first line must hold the vertex count");
  const int n = detail::parse_int(head[0], "graph vertex count");
  if (n < 0) throw ParseError("graph: negative vertex count");
  SimpleGraph g(n);
  for (++li; li < lines.size(); ++li) {
    if (detail::blank(lines[li])) continue;
    auto t = detail::tokens(lines[li]);
    if (t.size() != 2) throw ParseError("graph: edge lines must hold two vertices: '" + std::string(lines[li]) + "'");
    const int u = detail::parse_int(t[0], "graph edge");
    const int v = detail::parse_int(t[1], "graph edge");
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError("graph: edge endpoint out of range");
    if (u == v) throw ParseError("graph: loops are not allowed");
    g.add_edge(u, v);
  }
  return g;
}

std::string format_graph(const SimpleGraph& g) {
  std::string s = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) s += std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

}  // namespace lettergrid
