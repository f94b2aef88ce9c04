#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lettergrid {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on the vertices 1..order().
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int order);
  SimpleGraph(int order, std::span<const Edge> edges);

  int order() const { return n_; }
  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  int edge_count() const;
  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

SimpleGraph complement(const SimpleGraph& g);

/// Induced subgraph on `vertices`, relabelled 1..|vertices| in the given order.
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> vertices);

/// Returns f with f[v-1] = image of v in h, or nullopt if g and h are not
/// isomorphic. Backtracking with degree and neighbour-degree pruning; meant
/// for small graphs.
std::optional<std::vector<int>> is_isomorphic(const SimpleGraph& g, const SimpleGraph& h);

/// True iff g has an induced subgraph isomorphic to h.
bool has_induced(const SimpleGraph& g, const SimpleGraph& h);

enum class Family { matching, co_matching, path, cycle, complete, empty };

/// mK2, complement of mK2, P_n, C_n, K_n or the edgeless graph.
/// Throws std::invalid_argument on a size the family does not admit.
SimpleGraph family(Family kind, int size);

/// No induced 2K2, C4 or P4.
bool is_threshold(const SimpleGraph& g);
/// No induced 2K2, C4 or C5.
bool is_split(const SimpleGraph& g);

/// Isomorphism-invariant key: equal keys iff isomorphic. Order must be <= 11.
std::uint64_t canonical_code(const SimpleGraph& g);

/// Text format: first line "n", then one "u v" edge per line (1-based).
/// Throws ParseError.
SimpleGraph parse_graph(std::string_view text);
std::string format_graph(const SimpleGraph& g);

}  // namespace lettergrid
