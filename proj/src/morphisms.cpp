#include "holkit/morphisms.hpp"

#include <sstream>

namespace holkit {

Endomorphism::Endomorphism(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != rank_)
    throw mismatch_error("endomorphism needs one image per generator");
  for (const Word& im : images_)
    if (im.rank() != rank_) throw mismatch_error("endomorphism image over wrong alphabet");
}

Endomorphism Endomorphism::identity(int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<size_t>(rank));
  for (int g = 0; g < rank; ++g) images.push_back(generator_word(rank, g));
  return Endomorphism(rank, std::move(images));
}

Word Endomorphism::apply(const Word& w) const {
  if (w.rank() != rank_) throw mismatch_error("endomorphism applied to word over wrong alphabet");
  return substitute(w, images_);
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  if (f.rank() != g.rank()) throw mismatch_error("composing endomorphisms over different alphabets");
  std::vector<Word> images;
  images.reserve(static_cast<size_t>(f.rank()));
  for (int gen = 0; gen < g.rank(); ++gen) images.push_back(f.apply(g.image(gen)));
  return Endomorphism(f.rank(), std::move(images));
}

IntMatrix abelianize(const Endomorphism& f) {
  IntMatrix m(f.rank());
  for (int j = 0; j < f.rank(); ++j)
    for (int i = 0; i < f.rank(); ++i) m.at(i, j) = exponent_sum(f.image(j), i);
  return m;
}

Automorphism Automorphism::identity(int rank) {
  return Automorphism(Endomorphism::identity(rank), Endomorphism::identity(rank));
}

bool Automorphism::is_identity() const { return forward_ == Endomorphism::identity(rank()); }

Automorphism verify_automorphism(const Endomorphism& f, const Endomorphism& candidate_inverse) {
  if (f.rank() != candidate_inverse.rank())
    throw mismatch_error("automorphism candidate inverse over different alphabet");
  for (int g = 0; g < f.rank(); ++g) {
    Word target = generator_word(f.rank(), g);
    if (f.apply(candidate_inverse.image(g)) != target)
      throw not_inverse_error("f(candidate(x" + std::to_string(g + 1) + ")) != x" + std::to_string(g + 1));
    if (candidate_inverse.apply(f.image(g)) != target)
      throw not_inverse_error("candidate(f(x" + std::to_string(g + 1) + ")) != x" + std::to_string(g + 1));
  }
  return Automorphism(f, candidate_inverse);
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  return Automorphism(compose(f.forward(), g.forward()), compose(g.backward(), f.backward()));
}

Automorphism invert(const Automorphism& f) { return Automorphism(f.backward(), f.forward()); }

Automorphism power(const Automorphism& f, long long k) {
  Automorphism base = k >= 0 ? f : invert(f);
  long long e = k >= 0 ? k : -k;
  Automorphism out = Automorphism::identity(f.rank());
  while (e > 0) {
    if (e & 1) out = compose(out, base);
    base = compose(base, base);
    e >>= 1;
  }
  return out;
}

Automorphism inner(const Word& c) {
  int rank = c.rank();
  std::vector<Word> fwd, bwd;
  Word ci = invert(c);
  for (int g = 0; g < rank; ++g) {
    fwd.push_back(conjugate(c, generator_word(rank, g)));
    bwd.push_back(conjugate(ci, generator_word(rank, g)));
  }
  return verify_automorphism(Endomorphism(rank, std::move(fwd)), Endomorphism(rank, std::move(bwd)));
}

std::string to_string(const Endomorphism& f, const Alphabet& alphabet) {
  std::ostringstream out;
  for (int g = 0; g < f.rank(); ++g) {
    if (g) out << ", ";
    out << alphabet.name(g) << " -> " << to_string(f.image(g), alphabet);
  }
  return out.str();
}

std::string to_string(const Automorphism& f, const Alphabet& alphabet) { return to_string(f.forward(), alphabet); }

}  // namespace holkit
