// Exact arithmetic in finitely generated free groups: freely reduced words,
// multiplication, inversion, substitution under generator maps, and recovery
// of conjugators. Words are the universal currency of the toolkit; every
// other group (automorphisms, holomorphs, tower elements) is built on them.

#ifndef HOLKIT_WORDS_HPP_
#define HOLKIT_WORDS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holkit/errors.hpp"

namespace holkit {

/// A ranked alphabet. `names` are labels for parsing and printing only;
/// arithmetic identifies a free group by its rank alone.
struct Alphabet {
  std::vector<std::string> names;

  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> generator_names);

  int rank() const { return static_cast<int>(names.size()); }
  const std::string& name(int gen) const { return names.at(static_cast<size_t>(gen)); }
  std::optional<int> index_of(const std::string& name) const;

  /// x1..xn
  static Alphabet numbered(int rank);
  /// a, b
  static Alphabet ab();
};

/// A letter is a signed generator: +(g+1) for the generator g, -(g+1) for its
/// inverse. 0 never appears.
using Letter = int32_t;

constexpr Letter letter(int gen, int sign) { return sign >= 0 ? Letter(gen + 1) : -Letter(gen + 1); }
constexpr int letter_gen(Letter l) { return (l > 0 ? l : -l) - 1; }
constexpr int letter_sign(Letter l) { return l > 0 ? 1 : -1; }

/// A freely reduced word over a free group of a given rank. The empty word is
/// the identity. Invariant: no adjacent pair l, -l and every letter's
/// generator index lies in [0, rank).
class Word {
 public:
  Word() : rank_(0) {}
  explicit Word(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter letter_at(size_t i) const { return letters_[i]; }

  bool operator==(const Word& other) const = default;

  /// Reinterpret in a larger-rank group (F_r embeds in F_r', r' >= r).
  Word promoted(int new_rank) const;

  friend Word reduce(int rank, std::span<const Letter> raw);
  friend class WordBuilder;

 private:
  int rank_;
  std::vector<Letter> letters_;  // always freely reduced
};

/// Appends letters with on-the-fly cancellation; the cheap way to assemble
/// products and images without re-reducing from scratch.
class WordBuilder {
 public:
  explicit WordBuilder(int rank) : rank_(rank) {}

  void push(Letter l);
  void append(const Word& w);
  void append_inverse(const Word& w);
  void append_power(const Word& w, long long k);

  Word take();

 private:
  int rank_;
  std::vector<Letter> letters_;
};

/// Free reduction of a raw letter sequence. Idempotent; the result is the
/// unique reduced form regardless of cancellation order.
/// Throws mismatch_error if a letter's generator index is out of range.
Word reduce(int rank, std::span<const Letter> raw);

/// Reduced product uv. Throws mismatch_error if ranks differ.
Word multiply(const Word& u, const Word& v);

/// Reversed word with flipped signs; invert(invert(u)) == u.
Word invert(const Word& u);

/// u^k (k may be negative or zero).
Word power(const Word& u, long long k);

/// c u c^-1.
Word conjugate(const Word& c, const Word& u);

/// Single-generator word over the given rank.
Word generator_word(int rank, int gen, int sign = 1);

/// Image of u under the generator map g_i -> images[i]. All images must live
/// in one common group, whose rank is the rank of the result.
/// Throws mismatch_error on a missing image or inconsistent image ranks.
Word substitute(const Word& u, std::span<const Word> images);

/// Exponent sum of the given generator in u.
long long exponent_sum(const Word& u, int gen);

/// Given pairs (generator g, image w), find the unique c with
/// w = c g c^-1 for every pair, or nullopt if none exists. Uniqueness needs
/// at least two distinct generators among the pairs (trivial centre); with a
/// single pair the minimal-length solution is returned.
std::optional<Word> extract_conjugator(int rank, std::span<const std::pair<int, Word>> pairs);

/// Renders u in the shared word grammar (`a b^-2 (..)`); the empty word
/// prints as `e`. Powers of a repeated letter are folded: a a a -> a^3.
std::string to_string(const Word& u, const Alphabet& alphabet);

/// Compact generic spelling using x1..xn names.
std::string to_string(const Word& u);

}  // namespace holkit

#endif  // HOLKIT_WORDS_HPP_
