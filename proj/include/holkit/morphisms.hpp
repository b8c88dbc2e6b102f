// Endomorphisms and automorphisms of free groups as generator-image maps.
//
// Composition convention, used everywhere in the toolkit:
//   compose(f, g) = f-after-g, i.e. compose(f, g)(w) = f(g(w)),
// and the group product of automorphisms is that same composition.

#ifndef HOLKIT_MORPHISMS_HPP_
#define HOLKIT_MORPHISMS_HPP_

#include <string>
#include <vector>

#include "holkit/matrix.hpp"
#include "holkit/words.hpp"

namespace holkit {

/// A map of a free group given by its generator images, all over the domain
/// alphabet. Images are stored reduced.
class Endomorphism {
 public:
  Endomorphism() = default;
  Endomorphism(int rank, std::vector<Word> images);

  static Endomorphism identity(int rank);

  int rank() const { return rank_; }
  const Word& image(int gen) const { return images_.at(static_cast<size_t>(gen)); }
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;

  bool operator==(const Endomorphism& other) const = default;

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

/// compose(f, g)(w) = f(g(w)). Throws mismatch_error on rank mismatch.
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

/// Column j holds the exponent-sum vector of image j; a monoid homomorphism
/// to n x n integer matrices.
IntMatrix abelianize(const Endomorphism& f);

/// An endomorphism bundled with a verified two-sided inverse. Instances only
/// exist for genuine automorphisms; use verify_automorphism to certify one.
class Automorphism {
 public:
  Automorphism() = default;

  static Automorphism identity(int rank);

  int rank() const { return forward_.rank(); }
  const Endomorphism& forward() const { return forward_; }
  const Endomorphism& backward() const { return backward_; }
  const Word& image(int gen) const { return forward_.image(gen); }

  Word apply(const Word& w) const { return forward_.apply(w); }
  Word apply_inverse(const Word& w) const { return backward_.apply(w); }
  bool is_identity() const;

  /// Equality of automorphisms is equality of forward images (sound and
  /// complete for maps of free groups).
  bool operator==(const Automorphism& other) const { return forward_ == other.forward_; }

  friend Automorphism verify_automorphism(const Endomorphism& f, const Endomorphism& candidate_inverse);
  friend Automorphism compose(const Automorphism& f, const Automorphism& g);
  friend Automorphism invert(const Automorphism& f);

 private:
  Automorphism(Endomorphism fwd, Endomorphism bwd) : forward_(std::move(fwd)), backward_(std::move(bwd)) {}

  Endomorphism forward_;
  Endomorphism backward_;
};

/// Certifies that `candidate_inverse` is a two-sided inverse of `f` by
/// composing both ways and checking every generator. Sound and complete.
/// Throws not_inverse_error naming the first failing generator.
Automorphism verify_automorphism(const Endomorphism& f, const Endomorphism& candidate_inverse);

Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism invert(const Automorphism& f);
Automorphism power(const Automorphism& f, long long k);

/// The inner automorphism g -> c g c^-1. inner(c d) = compose(inner(c), inner(d)).
Automorphism inner(const Word& c);

inline IntMatrix abelianize(const Automorphism& f) { return abelianize(f.forward()); }

std::string to_string(const Endomorphism& f, const Alphabet& alphabet);
std::string to_string(const Automorphism& f, const Alphabet& alphabet);

}  // namespace holkit

#endif  // HOLKIT_MORPHISMS_HPP_
