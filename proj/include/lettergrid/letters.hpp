#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lettergrid/graphs.hpp"

namespace lettergrid {

/// Letters are indices 0..k-1 into an Alphabet.
using Letter = int;

/// Ordered finite set of distinct symbols.
class Alphabet {
 public:
  Alphabet() = default;
  /// Throws std::invalid_argument on duplicate or empty symbols.
  explicit Alphabet(std::vector<std::string> symbols);
  /// "a", "b", "c", ...
  static Alphabet standard(int k);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(Letter a) const { return symbols_.at(a); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<Letter> find(std::string_view symbol) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
};

/// Set of ordered letter pairs over an alphabet of a fixed size.
class Decoder {
 public:
  Decoder() = default;
  explicit Decoder(int alphabet_size);
  Decoder(int alphabet_size, std::initializer_list<std::pair<Letter, Letter>> pairs);

  int alphabet_size() const { return k_; }
  bool contains(Letter a, Letter b) const { return bits_[a * k_ + b] != 0; }
  void insert(Letter a, Letter b);
  void erase(Letter a, Letter b);
  std::vector<std::pair<Letter, Letter>> pairs() const;
  std::size_t size() const;

  auto operator<=>(const Decoder&) const = default;

 private:
  int k_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// A lettering of a graph: decoding `word` with `decoder` gives a graph that
/// `iso` maps the target graph onto. iso[v-1] is the word position (1-based)
/// of vertex v.
struct Letterization {
  Alphabet alphabet;
  Decoder decoder;
  std::vector<Letter> word;
  std::vector<int> iso;
};

/// Vertices 1..|word|; edge ij (i<j) iff (word[i], word[j]) is in the decoder.
SimpleGraph decode_letter_graph(const Decoder& decoder, std::span<const Letter> word);
/// Symbolic variant. Throws std::invalid_argument on a symbol outside the alphabet.
SimpleGraph decode_letter_graph(const Alphabet& alphabet, const Decoder& decoder,
                                std::span<const std::string> word);

/// Sigma^2 minus the decoder. Decodes every word to the complement graph.
Decoder complement_decoder(const Decoder& decoder);

/// True iff `iso` is a bijection carrying g exactly onto the decoded letter graph.
bool verify_letterization(const SimpleGraph& g, const Letterization& lz);

/// Lexicographically least word (and a matching iso) realising g under a
/// fixed decoder, or nullopt.
std::optional<Letterization> find_word_for_decoder(const SimpleGraph& g, const Alphabet& alphabet,
                                                   const Decoder& decoder);

/// A lettering of g over at most k letters, or nullopt. Among decoders that
/// are canonical under renaming of letters the least one (as a bit mask) is
/// used, and for it the lexicographically least word.
std::optional<Letterization> find_lettering(const SimpleGraph& g, int k);

/// Least k for which find_lettering succeeds (0 for the empty graph).
int lettericity(const SimpleGraph& g);

/// find_lettering for k = 1, 2, ... up to k_max; the first hit.
std::optional<Letterization> minimal_lettering(const SimpleGraph& g, int k_max);

/// Decoder text format: one "a b" ordered pair per line. Symbols are added to
/// `alphabet` in order of first appearance unless it is already fixed.
Decoder parse_decoder(std::string_view text, Alphabet& alphabet);
std::string format_decoder(const Alphabet& alphabet, const Decoder& decoder);
/// Whitespace-separated symbols.
std::vector<std::string> parse_word(std::string_view text);
std::string format_word(const Alphabet& alphabet, std::span<const Letter> word);

}  // namespace lettergrid
