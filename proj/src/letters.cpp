#include "lettergrid/letters.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "lettergrid/error.hpp"
#include "text_util.hpp"

namespace lettergrid {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) throw std::invalid_argument("empty alphabet symbol");
    for (std::size_t j = 0; j < i; ++j)
      if (symbols_[i] == symbols_[j]) throw std::invalid_argument("duplicate symbol " + symbols_[i]);
  }
}

Alphabet Alphabet::standard(int k) {
  std::vector<std::string> s;
  for (int i = 0; i < k; ++i) {
    s.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
  }
  return Alphabet(std::move(s));
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  for (int i = 0; i < size(); ++i)
    if (symbols_[i] == symbol) return i;
  return std::nullopt;
}

Decoder::Decoder(int alphabet_size) : k_(alphabet_size), bits_(static_cast<std::size_t>(alphabet_size) * alphabet_size, 0) {}

Decoder::Decoder(int alphabet_size, std::initializer_list<std::pair<Letter, Letter>> pairs)
    : Decoder(alphabet_size) {
  for (auto [a, b] : pairs) insert(a, b);
}

void Decoder::insert(Letter a, Letter b) {
  if (a < 0 || b < 0 || a >= k_ || b >= k_) throw std::out_of_range("decoder letter out of range");
  bits_[a * k_ + b] = 1;
}

void Decoder::erase(Letter a, Letter b) {
  if (a < 0 || b < 0 || a >= k_ || b >= k_) throw std::out_of_range("decoder letter out of range");
  bits_[a * k_ + b] = 0;
}

std::vector<std::pair<Letter, Letter>> Decoder::pairs() const {
  std::vector<std::pair<Letter, Letter>> out;
  for (int a = 0; a < k_; ++a)
    for (int b = 0; b < k_; ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

std::size_t Decoder::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

SimpleGraph decode_letter_graph(const Decoder& decoder, std::span<const Letter> word) {
  const int n = static_cast<int>(word.size());
  for (Letter a : word) {
    if (a < 0 || a >= decoder.alphabet_size()) throw std::invalid_argument("word letter outside the alphabet");
  }
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (decoder.contains(word[i], word[j])) g.add_edge(i + 1, j + 1);
  return g;
}

SimpleGraph decode_letter_graph(const Alphabet& alphabet, const Decoder& decoder,
                                std::span<const std::string> word) {
  std::vector<Letter> letters;
  for (const auto& s : word) {
    auto a = alphabet.find(s);
    if (!a) throw std::invalid_argument("symbol '" + s + "' is not in the alphabet");
    letters.push_back(*a);
  }
  return decode_letter_graph(decoder, letters);
}

Decoder complement_decoder(const Decoder& decoder) {
  Decoder out(decoder.alphabet_size());
  for (int a = 0; a < decoder.alphabet_size(); ++a)
    for (int b = 0; b < decoder.alphabet_size(); ++b)
      if (!decoder.contains(a, b)) out.insert(a, b);
  return out;
}

bool verify_letterization(const SimpleGraph& g, const Letterization& lz) {
  const int n = g.order();
  if (static_cast<int>(lz.word.size()) != n || static_cast<int>(lz.iso.size()) != n) return false;
  std::vector<bool> hit(n + 1, false);
  for (int p : lz.iso) {
    if (p < 1 || p > n || hit[p]) return false;
    hit[p] = true;
  }
  const SimpleGraph decoded = decode_letter_graph(lz.decoder, lz.word);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (g.adjacent(u, v) != decoded.adjacent(lz.iso[u - 1], lz.iso[v - 1])) return false;
  return true;
}

namespace {

// Word positions are filled left to right. A state records which letter each
// placed vertex carries; the letters still open to every unplaced vertex
// follow from it, since a vertex u placed later with letter b must satisfy
// adj(v, u) == (letter(v), b) in D for every placed v.
class WordSearch {
 public:
  WordSearch(const SimpleGraph& g, const Decoder& d) : n_(g.order()), k_(d.alphabet_size()) {
    if (n_ > 63) throw std::invalid_argument("lettering search supports at most 63 vertices");
    if (k_ < 1 || k_ > 15) throw std::invalid_argument("lettering search supports 1..15 letters");
    double states = 1;
    for (int i = 0; i < n_; ++i) states *= (k_ + 1);
    if (states > 9.0e18) throw std::invalid_argument("graph too large for the exact lettering search");
    adj_.assign(n_, 0);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (u != v && g.adjacent(u + 1, v + 1)) adj_[u] |= std::uint64_t{1} << v;
    const unsigned all = (1u << k_) - 1;
    after_.assign(static_cast<std::size_t>(k_) * 2, 0);
    for (int a = 0; a < k_; ++a) {
      unsigned row = 0;
      for (int b = 0; b < k_; ++b)
        if (d.contains(a, b)) row |= 1u << b;
      after_[a * 2 + 1] = row;        // letters b a later adjacent vertex may carry
      after_[a * 2 + 0] = all & ~row;  // letters b a later non-adjacent vertex may carry
    }
    pow_.assign(n_ + 1, 1);
    for (int i = 1; i <= n_; ++i) pow_[i] = pow_[i - 1] * static_cast<std::uint64_t>(k_ + 1);
  }

  struct State {
    std::uint64_t key = 0;  // sum of (letter+1) * (k+1)^v over placed v
    std::uint64_t placed = 0;
    std::vector<std::uint16_t> open;  // feasible letter mask per vertex
  };

  State initial() const {
    State s;
    s.open.assign(n_, static_cast<std::uint16_t>((1u << k_) - 1));
    return s;
  }

  // Place v with letter a; false if some unplaced vertex runs out of letters.
  bool step(const State& s, int v, Letter a, State& out) const {
    out.key = s.key + pow_[v] * static_cast<std::uint64_t>(a + 1);
    out.placed = s.placed | (std::uint64_t{1} << v);
    out.open = s.open;
    for (int u = 0; u < n_; ++u) {
      if (out.placed >> u & 1) continue;
      const bool edge = adj_[v] >> u & 1;
      out.open[u] &= static_cast<std::uint16_t>(after_[a * 2 + (edge ? 1 : 0)]);
      if (out.open[u] == 0) return false;
    }
    return true;
  }

  bool complete(const State& s) const { return s.placed == full(); }

  bool can_complete(const State& s) {
    if (complete(s)) return true;
    if (auto it = memo_.find(s.key); it != memo_.end()) return it->second;
    bool ok = false;
    State next;
    for (Letter a = 0; a < k_ && !ok; ++a) {
      for (int v = 0; v < n_ && !ok; ++v) {
        if ((s.placed >> v & 1) || !(s.open[v] >> a & 1)) continue;
        if (step(s, v, a, next) && can_complete(next)) ok = true;
      }
    }
    memo_.emplace(s.key, ok);
    return ok;
  }

  // Lexicographically least word over all completions.
  std::optional<std::vector<Letter>> least_word() {
    State start = initial();
    if (!can_complete(start)) return std::nullopt;
    std::vector<State> frontier{start};
    std::vector<Letter> word;
    for (int p = 0; p < n_; ++p) {
      bool advanced = false;
      for (Letter a = 0; a < k_ && !advanced; ++a) {
        std::vector<State> next_frontier;
        std::unordered_set<std::uint64_t> seen;
        State next;
        for (const auto& s : frontier) {
          for (int v = 0; v < n_; ++v) {
            if ((s.placed >> v & 1) || !(s.open[v] >> a & 1)) continue;
            if (!step(s, v, a, next) || !can_complete(next)) continue;
            if (seen.insert(next.key).second) next_frontier.push_back(next);
          }
        }
        if (!next_frontier.empty()) {
          word.push_back(a);
          frontier = std::move(next_frontier);
          advanced = true;
        }
      }
      if (!advanced) return std::nullopt;  // unreachable: can_complete held
    }
    return word;
  }

  // Vertex order realising a fixed word, smallest vertex first at each position.
  std::optional<std::vector<int>> realise(const std::vector<Letter>& word) {
    word_memo_.clear();
    std::vector<int> order;
    if (!realise_from(initial(), word, order)) return std::nullopt;
    return order;
  }

 private:
  std::uint64_t full() const { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }

  bool realise_from(const State& s, const std::vector<Letter>& word, std::vector<int>& order) {
    if (complete(s)) return true;
    if (word_memo_.count(s.key)) return false;
    const Letter a = word[order.size()];
    State next;
    for (int v = 0; v < n_; ++v) {
      if ((s.placed >> v & 1) || !(s.open[v] >> a & 1)) continue;
      if (!step(s, v, a, next)) continue;
      order.push_back(v);
      if (realise_from(next, word, order)) return true;
      order.pop_back();
    }
    word_memo_.insert(s.key);
    return false;
  }

  int n_;
  int k_;
  std::vector<std::uint64_t> adj_;
  std::vector<unsigned> after_;
  std::vector<std::uint64_t> pow_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::unordered_set<std::uint64_t> word_memo_;
};

Letterization make_letterization(const Alphabet& alphabet, const Decoder& decoder,
                                 std::vector<Letter> word, const std::vector<int>& order) {
  Letterization lz{alphabet, decoder, std::move(word), std::vector<int>(order.size())};
  for (std::size_t p = 0; p < order.size(); ++p) lz.iso[order[p]] = static_cast<int>(p) + 1;
  return lz;
}

// Decoder given as a k*k bit mask, bit a*k+b for the pair (a, b).
Decoder decoder_from_mask(int k, std::uint64_t mask) {
  Decoder d(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (mask >> (a * k + b) & 1) d.insert(a, b);
  return d;
}

// Masks that are least among all their letter renamings, in increasing order.
const std::vector<std::uint64_t>& canonical_decoder_masks(int k) {
  static std::unordered_map<int, std::vector<std::uint64_t>> cache;
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  if (k > 5) throw std::invalid_argument("decoder enumeration supports at most 5 letters");
  std::vector<std::vector<int>> renamings;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    renamings.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::uint64_t> out;
  const std::uint64_t total = std::uint64_t{1} << (k * k);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool least = true;
    for (std::size_t r = 1; r < renamings.size() && least; ++r) {
      std::uint64_t renamed = 0;
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          if (mask >> (a * k + b) & 1) renamed |= std::uint64_t{1} << (renamings[r][a] * k + renamings[r][b]);
      least = renamed >= mask;
    }
    if (least) out.push_back(mask);
  }
  return cache.emplace(k, std::move(out)).first->second;
}

}  // namespace

std::optional<Letterization> find_word_for_decoder(const SimpleGraph& g, const Alphabet& alphabet,
                                                   const Decoder& decoder) {
  if (alphabet.size() != decoder.alphabet_size()) {
    throw std::invalid_argument("alphabet and decoder sizes differ");
  }
  if (g.order() == 0) return Letterization{alphabet, decoder, {}, {}};
  WordSearch search(g, decoder);
  auto word = search.least_word();
  if (!word) return std::nullopt;
  auto order = search.realise(*word);
  if (!order) return std::nullopt;
  return make_letterization(alphabet, decoder, std::move(*word), *order);
}

std::optional<Letterization> find_lettering(const SimpleGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("find_lettering needs k >= 1");
  const Alphabet alphabet = Alphabet::standard(k);
  for (std::uint64_t mask : canonical_decoder_masks(k)) {
    auto lz = find_word_for_decoder(g, alphabet, decoder_from_mask(k, mask));
    if (lz) return lz;
  }
  return std::nullopt;
}

std::optional<Letterization> minimal_lettering(const SimpleGraph& g, int k_max) {
  if (g.order() == 0) return Letterization{};
  for (int k = 1; k <= k_max; ++k) {
    if (auto lz = find_lettering(g, k)) return lz;
  }
  return std::nullopt;
}

int lettericity(const SimpleGraph& g) {
  if (g.order() == 0) return 0;
  for (int k = 1;; ++k) {
    if (find_lettering(g, k)) return k;
  }
}

Decoder parse_decoder(std::string_view text, Alphabet& alphabet) {
  const bool fixed = alphabet.size() > 0;
  std::vector<std::string> symbols = alphabet.symbols();
  std::vector<std::pair<int, int>> pairs;
  auto index = [&](std::string_view s) {
    for (std::size_t i = 0; i < symbols.size(); ++i)
      if (symbols[i] == s) return static_cast<int>(i);
    if (fixed) throw ParseError("decoder: symbol '" + std::string(s) + "' is not in the alphabet");
    symbols.emplace_back(s);
    return static_cast<int>(symbols.size()) - 1;
  };
  for (auto line : detail::split_lines(text)) {
    if (detail::blank(line)) continue;
    auto t = detail::tokens(line);
    if (t.size() != 2) throw ParseError("decoder: expected 'a b' per line, got '" + std::string(line) + "'");
    const int a = index(t[0]);
    const int b = index(t[1]);
    pairs.emplace_back(a, b);
  }
  if (!fixed) alphabet = Alphabet(symbols);
  Decoder d(alphabet.size());
  for (auto [a, b] : pairs) d.insert(a, b);
  return d;
}

std::string format_decoder(const Alphabet& alphabet, const Decoder& decoder) {
  std::string s;
  for (auto [a, b] : decoder.pairs()) s += alphabet.symbol(a) + " " + alphabet.symbol(b) + "\n";
  return s;
}

std::vector<std::string> parse_word(std::string_view text) {
  std::vector<std::string> out;
  for (auto t : detail::tokens(text)) out.emplace_back(t);
  return out;
}

std::string format_word(const Alphabet& alphabet, std::span<const Letter> word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += alphabet.symbol(word[i]);
  }
  return s;
}

}  // namespace lettergrid
