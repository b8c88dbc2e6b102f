// Concrete Aut(F_2) machinery over F_2 = <a, b>: the standard generators
// p, x, y, ta, tb, the projection onto GL_2(Z), the unique normal form
// p^r u(x,y) x^{2s} w(ta,tb), bounded ball enumeration and element orders.
//
// Generator images (validated by the full relator suite):
//   p:  a -> b,      b -> a
//   x:  a -> b^-1,   b -> a
//   y:  a -> a b^-1, b -> a
//   ta = inner(a), tb = inner(b), t1 = p x  (a -> a^-1, b -> b).

#ifndef HOLKIT_AUTF2_HPP_
#define HOLKIT_AUTF2_HPP_

#include <cstdlib>
#include <string>
#include <unordered_set>
#include <vector>

#include "holkit/group.hpp"
#include "holkit/presentations.hpp"

namespace holkit {

/// The certified basis automorphisms.
struct AutF2Basis {
  Automorphism p, x, y, ta, tb, t1;

  static const AutF2Basis& get();
};

/// Named constants for the CLI grammar: p, x, y, ta, tb, t1, id.
Automorphism autf2_constant(const std::string& name);

IntMatrix gl2_P();
IntMatrix gl2_X();
IntMatrix gl2_Y();

/// A GL_2(Z) element; construction validates determinant +-1.
struct Gl2Element {
  IntMatrix mat;

  Gl2Element() : mat(IntMatrix::identity(2)) {}
  explicit Gl2Element(IntMatrix m);

  bool operator==(const Gl2Element& other) const = default;
};

/// The projection Aut(F_2) -> GL_2(Z): p -> P, x -> X, y -> Y, inner -> 1.
/// Equals abelianize; kernel contains every inner automorphism.
Gl2Element project_gl2(const Automorphism& f);

/// M = P^r * U(X,Y) * X^{2s} with r, s in {0,1} and u the alternating word
/// in which x, y, y^-1 are the only powers of x, y appearing. u is a Word
/// over the rank-2 alphabet {x, y}.
struct Gl2Decomposition {
  int r = 0;
  Word u{2};
  int s = 0;

  bool operator==(const Gl2Decomposition& other) const = default;
};

/// Decomposes any determinant +-1 matrix; deterministic, and the unique
/// decomposition of this shape (the word u is the free-product normal form
/// of the image in PSL_2(Z) = Z/2 * Z/3).
Gl2Decomposition gl2_decompose(const IntMatrix& m);

/// Evaluates (r, u, s) back to a matrix.
IntMatrix gl2_evaluate(const Gl2Decomposition& d);

/// The unique normal form p^r u(x,y) x^{2s} w(ta,tb). u is a Word over
/// {x, y}; w is a Word over {ta, tb} (the conjugator respelled).
struct NormalForm {
  int r = 0;
  Word u{2};
  int s = 0;
  Word w{2};

  bool operator==(const NormalForm& other) const = default;
};

/// Computes the normal form: project to GL_2(Z), decompose, then extract the
/// inner residue. Two automorphisms are equal iff their normal forms are
/// identical. Throws internal_error if the residue is not inner (cannot
/// happen: the projection's kernel is Inn(F_2)).
NormalForm normal_form(const Automorphism& f);

/// Composes the normal form back into an automorphism.
Automorphism evaluate(const NormalForm& nf);

/// p^r · u · x^2s · w rendering, e.g. "p^1 · e · x^0 · tb".
std::string to_string(const NormalForm& nf);

/// Aut(F_2) presentation fixture (11 relators) with the basis assignment,
/// and the GL_2(Z) presentation fixture (5 relators) with P, X, Y.
Presentation autf2_presentation();
std::vector<Automorphism> autf2_assignment();
Presentation gl2_presentation();
std::vector<IntMatrix> gl2_assignment();

/// Element cap for ball enumeration: HOLKIT_MAX_BALL or 10^6.
size_t default_ball_cap();

/// All products of at most `radius` generators and inverses, deduplicated by
/// group equality, in deterministic BFS order (identity first). Monotone in
/// the radius. Throws resource_limit_error past the cap.
template <GroupElement T>
std::vector<T> enumerate_ball(const std::vector<T>& generators, int radius, size_t cap = default_ball_cap()) {
  if (radius < 0) throw error("ball radius must be >= 0");
  if (generators.empty()) throw error("ball enumeration needs at least one generator");
  std::vector<T> elements;
  std::unordered_set<std::string> seen;
  auto add = [&](const T& t) {
    if (!seen.insert(group_key(t)).second) return false;
    if (elements.size() >= cap)
      throw resource_limit_error("ball enumeration exceeded cap of " + std::to_string(cap) + " elements");
    elements.push_back(t);
    return true;
  };
  add(group_id(generators.front()));
  size_t frontier_begin = 0;
  for (int step = 0; step < radius; ++step) {
    size_t frontier_end = elements.size();
    if (frontier_begin == frontier_end) break;  // ball stabilized
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const T& g : generators) {
        add(group_mul(elements[i], g));
        add(group_mul(elements[i], group_inv(g)));
      }
    }
    frontier_begin = frontier_end;
  }
  return elements;
}

struct OrderResult {
  bool finite = false;
  long long order = 0;  // valid when finite

  bool operator==(const OrderResult& other) const = default;
};

/// Least k <= cap with f^k = identity, or the beyond-cap marker.
template <GroupElement T>
OrderResult order_of(const T& f, long long cap) {
  if (cap < 1) throw error("order cap must be >= 1");
  T acc = f;
  for (long long k = 1; k <= cap; ++k) {
    if (group_is_id(acc)) return {true, k};
    if (k < cap) acc = group_mul(acc, f);
  }
  return {false, 0};
}

/// Finite-order test for GL_2(Z) images: every finite-order element of
/// GL_2(Z) has order dividing 12, so M has finite order iff M^12 = I.
bool gl2_has_finite_order(const IntMatrix& m);

}  // namespace holkit

#endif  // HOLKIT_AUTF2_HPP_
