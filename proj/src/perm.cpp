#include "lettergrid/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lettergrid/error.hpp"
#include "text_util.hpp"

namespace lettergrid {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[v] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  auto toks = detail::tokens(text, /*commas=*/true);
  std::vector<int> values;
  if (toks.size() == 1 && toks[0].size() > 1 &&
      std::all_of(toks[0].begin(), toks[0].end(), [](char c) { return c >= '1' && c <= '9'; })) {
    for (char c : toks[0]) values.push_back(c - '0');
  } else {
    for (auto t : toks) values.push_back(detail::parse_int(t, "permutation"));
  }
  try {
    return Permutation(std::move(values));
  } catch (const std::invalid_argument&) {
    throw ParseError("permutation: '" + std::string(text) + "' is not a rearrangement of 1..n");
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int i = 0; i < size(); ++i) inv[values_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(values_[i]);
  }
  return s;
}

std::string Permutation::compact() const {
  if (size() >= 10) return to_string();
  std::string s;
  for (int v : values_) s += static_cast<char>('0' + v);
  return s;
}

Permutation standardize(std::span<const int> sequence) {
  std::vector<int> order(sequence.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sequence[a] < sequence[b]; });
  std::vector<int> ranks(sequence.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(ranks));
}

namespace {

// Backtracking over pattern positions. Pattern entry j must land strictly
// between the text values already assigned to its nearest smaller and
// larger pattern values among positions < j.
struct EmbeddingSearch {
  const std::vector<int>& text;
  const std::vector<int>& pattern;
  std::vector<int> lower_of;  // pattern position holding the next-smaller value, or -1
  std::vector<int> upper_of;
  std::vector<int> chosen;

  EmbeddingSearch(const std::vector<int>& t, const std::vector<int>& p)
      : text(t), pattern(p), lower_of(p.size(), -1), upper_of(p.size(), -1), chosen(p.size()) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      for (std::size_t q = 0; q < j; ++q) {
        if (p[q] < p[j] && (lower_of[j] < 0 || p[q] > p[lower_of[j]])) lower_of[j] = static_cast<int>(q);
        if (p[q] > p[j] && (upper_of[j] < 0 || p[q] < p[upper_of[j]])) upper_of[j] = static_cast<int>(q);
      }
    }
  }

  bool run(std::size_t j, std::size_t from) {
    if (j == pattern.size()) return true;
    const std::size_t remaining = pattern.size() - j;
    const int lo = lower_of[j] < 0 ? 0 : text[chosen[lower_of[j]]];
    const int hi = upper_of[j] < 0 ? static_cast<int>(text.size()) + 1 : text[chosen[upper_of[j]]];
    for (std::size_t i = from; i + remaining <= text.size(); ++i) {
      if (text[i] <= lo || text[i] >= hi) continue;
      chosen[j] = static_cast<int>(i);
      if (run(j + 1, i + 1)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_embedding(const Permutation& pi, const Permutation& sigma) {
  if (sigma.size() > pi.size()) return std::nullopt;
  EmbeddingSearch search(pi.values(), sigma.values());
  if (!search.run(0, 0)) return std::nullopt;
  std::vector<int> witness;
  for (int i : search.chosen) witness.push_back(i + 1);
  return witness;
}

bool contains(const Permutation& pi, const Permutation& sigma) {
  return find_embedding(pi, sigma).has_value();
}

SimpleGraph inversion_graph(const Permutation& pi) {
  SimpleGraph g(pi.size());
  for (int i = 1; i <= pi.size(); ++i) {
    for (int j = i + 1; j <= pi.size(); ++j) {
      if (pi(i) > pi(j)) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<MonotoneInterval> monotone_intervals(const Permutation& pi) {
  std::vector<MonotoneInterval> out;
  const int n = pi.size();
  int i = 1;
  while (i < n) {
    const int step = pi(i + 1) - pi(i);
    if (step != 1 && step != -1) {
      ++i;
      continue;
    }
    int j = i + 1;
    while (j < n && pi(j + 1) - pi(j) == step) ++j;
    out.push_back({i, j - i + 1, step == 1 ? Direction::increasing : Direction::decreasing});
    i = j;
  }
  return out;
}

Contraction contract_once(const Permutation& pi) {
  const auto intervals = monotone_intervals(pi);
  std::vector<std::pair<int, int>> ranges;
  std::vector<int> representatives;  // one source value per block
  int i = 1;
  std::size_t next = 0;
  while (i <= pi.size()) {
    if (next < intervals.size() && intervals[next].start == i) {
      const int last = i + intervals[next].length - 1;
      ranges.emplace_back(i, last);
      representatives.push_back(pi(i));
      i = last + 1;
      ++next;
    } else {
      ranges.emplace_back(i, i);
      representatives.push_back(pi(i));
      ++i;
    }
  }
  // Blocks occupy disjoint value ranges, so any representative standardizes correctly.
  return {standardize(representatives), std::move(ranges)};
}

Contraction contract(const Permutation& pi) {
  Contraction current{pi, {}};
  for (int i = 1; i <= pi.size(); ++i) current.source_ranges.emplace_back(i, i);
  while (!monotone_intervals(current.result).empty()) {
    Contraction step = contract_once(current.result);
    std::vector<std::pair<int, int>> composed;
    for (auto [first, last] : step.source_ranges) {
      composed.emplace_back(current.source_ranges[first - 1].first,
                            current.source_ranges[last - 1].second);
    }
    current.result = std::move(step.result);
    current.source_ranges = std::move(composed);
  }
  return current;
}

Permutation inflate(const Permutation& sigma, std::span<const Block> blocks) {
  if (static_cast<int>(blocks.size()) != sigma.size()) {
    throw std::invalid_argument("inflate: one block per entry required");
  }
  for (const auto& b : blocks) {
    if (b.length < 1) throw std::invalid_argument("inflate: block length must be positive");
  }
  // Lowest value of the block that replaces each value of sigma.
  const auto inv = sigma.inverse();
  std::vector<int> base(sigma.size() + 1);
  int next = 1;
  for (int v = 1; v <= sigma.size(); ++v) {
    base[v] = next;
    next += blocks[inv(v) - 1].length;
  }
  std::vector<int> out;
  for (int j = 1; j <= sigma.size(); ++j) {
    const auto& b = blocks[j - 1];
    for (int s = 0; s < b.length; ++s) {
      const int offset = b.direction == Direction::increasing ? s : b.length - 1 - s;
      out.push_back(base[sigma(j)] + offset);
    }
  }
  return Permutation(std::move(out));
}

namespace {

void shuffle_into(std::span<const int> u, std::span<const int> v, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (u.empty() && v.empty()) {
    out.push_back(prefix);
    return;
  }
  if (!u.empty()) {
    prefix.push_back(u.front());
    shuffle_into(u.subspan(1), v, prefix, out);
    prefix.pop_back();
  }
  if (!v.empty()) {
    prefix.push_back(v.front());
    shuffle_into(u, v.subspan(1), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> shuffle(std::span<const int> u, std::span<const int> v) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  shuffle_into(u, v, prefix, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace lettergrid
