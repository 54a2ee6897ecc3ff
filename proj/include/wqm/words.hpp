#ifndef WQM_WORDS_HPP
#define WQM_WORDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wqm/errors.hpp"

namespace wqm {

// A letter is an index into the doubled generating set: letter 2j is the
// j-th generator, letter 2j+1 is its formal inverse.
using Letter = unsigned char;

constexpr Letter inverse_of(Letter l) noexcept { return static_cast<Letter>(l ^ 1u); }
constexpr bool is_positive(Letter l) noexcept { return (l & 1u) == 0; }
constexpr int generator_index(Letter l) noexcept { return l >> 1; }

/**
 * The doubled generating set of a free group of finite rank, with the ASCII
 * convention 'a'..'z' for generators and 'A'..'Z' for their inverses.
 * Letters are totally ordered by their index, so 'a' < 'A' < 'b' < 'B' < ...;
 * every deterministic ordering downstream derives from this one.
 */
class Alphabet {
 public:
  explicit Alphabet(int rank);

  int rank() const noexcept { return rank_; }
  int num_letters() const noexcept { return 2 * rank_; }
  bool valid(Letter l) const noexcept { return l < num_letters(); }

  char to_char(Letter l) const;
  // Throws InputError on characters outside the alphabet.
  Letter from_char(char c) const;

 private:
  int rank_;
};

/**
 * An element of the free group, stored as its unique reduced spelling.
 * Letters are raw bytes in a std::string, so short words live inline.
 * Comparison is shortlex (length first, then letter order).
 */
class ReducedWord {
 public:
  ReducedWord() = default;

  // Freely reduces an arbitrary letter sequence.
  static ReducedWord from_raw(std::span<const Letter> raw);
  // Trusts the input to be reduced already (checked with an assertion-style
  // scan in debug paths via debug_is_reduced).
  static ReducedWord from_reduced(std::string data);

  static bool debug_is_reduced(std::string_view data);

  std::size_t length() const noexcept { return data_.size(); }
  bool is_identity() const noexcept { return data_.empty(); }
  Letter letter(std::size_t i) const { return static_cast<Letter>(data_[i]); }
  Letter first() const { return letter(0); }
  Letter last() const { return letter(length() - 1); }

  // Reduced subword consisting of the first n letters.
  ReducedWord prefix(std::size_t n) const;
  ReducedWord subword(std::size_t pos, std::size_t n) const;

  // Group multiplication with free cancellation at the seam.
  ReducedWord operator*(const ReducedWord& rhs) const;
  ReducedWord inverse() const;

  // Appends a single letter (cancelling if it inverts the last one).
  ReducedWord append(Letter l) const;

  bool operator==(const ReducedWord&) const = default;
  // shortlex
  std::strong_ordering operator<=>(const ReducedWord& rhs) const {
    if (auto c = data_.size() <=> rhs.data_.size(); c != 0) return c;
    return data_ <=> rhs.data_;
  }

  const std::string& bytes() const noexcept { return data_; }

 private:
  std::string data_;
};

// Parses a word in the case convention of `alpha`. The empty string parses to
// the identity; "e" does too when 'e' is not itself a generator of `alpha`.
ReducedWord parse_word(const Alphabet& alpha, std::string_view text);

// Formats a word; the identity prints as "e".
std::string format_word(const Alphabet& alpha, const ReducedWord& w);

inline constexpr int kDefaultBallCap = 8;

// All reduced words of length <= radius in shortlex order.
// Throws ResourceError when radius exceeds the cap.
std::vector<ReducedWord> ball(const Alphabet& alpha, int radius,
                              int cap = kDefaultBallCap);

// Words of length exactly n, in lexicographic order.
std::vector<ReducedWord> sphere(const Alphabet& alpha, int n,
                                int cap = kDefaultBallCap);

// Word metric: |x^{-1} y|.
std::size_t word_distance(const ReducedWord& x, const ReducedWord& y);

// The single letter labelling the step from x to an adjacent vertex y of the
// Cayley tree, i.e. x^{-1}y when that has length one.
std::optional<Letter> edge_letter(const ReducedWord& x, const ReducedWord& y);

struct ReducedWordHash {
  std::size_t operator()(const ReducedWord& w) const noexcept {
    return std::hash<std::string>{}(w.bytes());
  }
};

}  // namespace wqm

#endif  // WQM_WORDS_HPP
