// Shared test helpers: deterministic random generators and the independent
// oracles the unit suites check the library against. Oracles deliberately
// avoid the library's own fast paths.

#ifndef HOLKIT_TEST_SUPPORT_HPP_
#define HOLKIT_TEST_SUPPORT_HPP_

#include <random>
#include <vector>

#include "holkit/autf2.hpp"
#include "holkit/words.hpp"

namespace holkit::testing {

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

inline std::vector<Letter> random_raw_letters(std::mt19937_64& rng, int rank, int len) {
  std::vector<Letter> out;
  std::uniform_int_distribution<int> gen(0, rank - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (int i = 0; i < len; ++i) out.push_back(letter(gen(rng), sgn(rng) ? +1 : -1));
  return out;
}

inline Word random_reduced(std::mt19937_64& rng, int rank, int len) {
  WordBuilder b(rank);
  std::uniform_int_distribution<int> gen(0, rank - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  Letter prev = 0;
  for (int i = 0; i < len; ++i) {
    Letter l;
    do {
      l = letter(gen(rng), sgn(rng) ? +1 : -1);
    } while (l == -prev);
    b.push(l);
    prev = l;
  }
  return b.take();
}

/// Oracle: free reduction by repeatedly deleting a cancelling adjacent pair
/// chosen at a random position, until none remains. Confluence of free
/// reduction means any deletion order gives the canonical form.
inline std::vector<Letter> reduce_oracle(std::mt19937_64& rng, std::vector<Letter> letters) {
  while (true) {
    std::vector<size_t> cancelling;
    for (size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i] == -letters[i + 1]) cancelling.push_back(i);
    if (cancelling.empty()) return letters;
    std::uniform_int_distribution<size_t> pick(0, cancelling.size() - 1);
    size_t at = cancelling[pick(rng)];
    letters.erase(letters.begin() + static_cast<long>(at), letters.begin() + static_cast<long>(at) + 2);
  }
}

/// Oracle: brute-force conjugator search over all reduced words of length
/// <= max_len.
inline std::optional<Word> conjugator_search_oracle(int rank, const std::vector<std::pair<int, Word>>& pairs,
                                                    int max_len) {
  std::vector<Word> frontier = {Word(rank)};
  for (int len = 0; len <= max_len; ++len) {
    for (const Word& c : frontier) {
      bool ok = true;
      for (const auto& [gen, image] : pairs)
        if (conjugate(c, generator_word(rank, gen)) != image) {
          ok = false;
          break;
        }
      if (ok) return c;
    }
    std::vector<Word> next;
    for (const Word& c : frontier)
      for (int g = 0; g < rank; ++g)
        for (int s : {+1, -1}) {
          Word cand = multiply(c, generator_word(rank, g, s));
          if (cand.length() == c.length() + 1) next.push_back(cand);
        }
    frontier = std::move(next);
  }
  return std::nullopt;
}

/// Oracle: enumerate all normal-form words (r, u, s) with |u| <= max_u and
/// find the one evaluating to the target matrix.
inline std::optional<Gl2Decomposition> gl2_bfs_oracle(const IntMatrix& target, int max_u) {
  std::vector<Word> layer = {Word(2)};
  std::vector<Word> all = layer;
  for (int len = 1; len <= max_u; ++len) {
    std::vector<Word> next;
    for (const Word& u : layer) {
      Letter last = u.length() ? u.letter_at(u.length() - 1) : 0;
      if (u.length() == 0 || letter_gen(last) == 1) {
        next.push_back(multiply(u, generator_word(2, 0)));  // append x
      }
      if (u.length() == 0 || letter_gen(last) == 0) {
        next.push_back(multiply(u, generator_word(2, 1)));
        next.push_back(multiply(u, generator_word(2, 1, -1)));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  for (const Word& u : all)
    for (int r : {0, 1})
      for (int s : {0, 1}) {
        Gl2Decomposition d{r, u, s};
        if (gl2_evaluate(d) == target) return d;
      }
  return std::nullopt;
}

inline Automorphism random_basis_product(std::mt19937_64& rng, int len) {
  auto gens = autf2_assignment();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  Automorphism acc = Automorphism::identity(2);
  for (int i = 0; i < len; ++i) acc = compose(acc, sgn(rng) ? gens[static_cast<size_t>(pick(rng))]
                                                            : invert(gens[static_cast<size_t>(pick(rng))]));
  return acc;
}

}  // namespace holkit::testing

#endif  // HOLKIT_TEST_SUPPORT_HPP_
