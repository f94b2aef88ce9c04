#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lettergrid/graphs.hpp"

namespace lettergrid {

/// A permutation in one-line notation. Indices and values are 1-based.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `values` rearranges 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  static Permutation identity(int n);
  static Permutation decreasing(int n);
  /// Whitespace- or comma-separated one-line notation. A single token of
  /// digits such as "3142" is also accepted as a shorthand for lengths < 10.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }
  Permutation inverse() const;

  /// "3 1 4 2"
  std::string to_string() const;
  /// "3142" when every value is a single digit, otherwise to_string().
  std::string compact() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// Order-isomorphic permutation of a sequence of distinct integers.
Permutation standardize(std::span<const int> sequence);

/// Lexicographically least embedding of sigma into pi (1-based indices).
std::optional<std::vector<int>> find_embedding(const Permutation& pi, const Permutation& sigma);
bool contains(const Permutation& pi, const Permutation& sigma);

/// Edge ij iff i < j and pi(i) > pi(j).
SimpleGraph inversion_graph(const Permutation& pi);

enum class Direction { increasing, decreasing };

struct MonotoneInterval {
  int start = 0;   // first position, 1-based
  int length = 0;  // >= 2
  Direction direction = Direction::increasing;
  bool operator==(const MonotoneInterval&) const = default;
};

/// All maximal nontrivial monotone intervals in position order.
std::vector<MonotoneInterval> monotone_intervals(const Permutation& pi);

struct Contraction {
  Permutation result;
  /// For entry j of result, the closed range of source positions it covers.
  std::vector<std::pair<int, int>> source_ranges;
};

/// One round: contract every maximal nontrivial monotone interval of pi.
Contraction contract_once(const Permutation& pi);
/// Contract to a fixed point; the result has only trivial monotone intervals.
Contraction contract(const Permutation& pi);

struct Block {
  int length = 1;
  Direction direction = Direction::increasing;
};

/// Replaces entry j of sigma by a monotone run of blocks[j].length entries.
/// Throws std::invalid_argument on a zero length or a size mismatch.
Permutation inflate(const Permutation& sigma, std::span<const Block> blocks);

/// All interleavings of u and v that keep the internal order of each.
/// Sorted and free of duplicates.
std::vector<std::vector<int>> shuffle(std::span<const int> u, std::span<const int> v);

/// All permutations of length n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace lettergrid
