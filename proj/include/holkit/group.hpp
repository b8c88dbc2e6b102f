// Uniform group-element operations so the relator checker, ball enumerator
// and order computation work over every concrete group in the toolkit:
// words, automorphisms, integer matrices, holomorph and tower elements.

#ifndef HOLKIT_GROUP_HPP_
#define HOLKIT_GROUP_HPP_

#include <concepts>
#include <string>

#include "holkit/matrix.hpp"
#include "holkit/morphisms.hpp"
#include "holkit/words.hpp"

namespace holkit {

inline Word group_mul(const Word& a, const Word& b) { return multiply(a, b); }
inline Word group_inv(const Word& a) { return invert(a); }
inline Word group_id(const Word& like) { return Word(like.rank()); }
inline bool group_eq(const Word& a, const Word& b) { return a == b; }

inline Automorphism group_mul(const Automorphism& a, const Automorphism& b) { return compose(a, b); }
inline Automorphism group_inv(const Automorphism& a) { return invert(a); }
inline Automorphism group_id(const Automorphism& like) { return Automorphism::identity(like.rank()); }
inline bool group_eq(const Automorphism& a, const Automorphism& b) { return a == b; }

inline IntMatrix group_mul(const IntMatrix& a, const IntMatrix& b) { return a * b; }
inline IntMatrix group_inv(const IntMatrix& a) { return a.inverse(); }
inline IntMatrix group_id(const IntMatrix& like) { return IntMatrix::identity(like.size()); }
inline bool group_eq(const IntMatrix& a, const IntMatrix& b) { return a == b; }

/// Canonical serialization; equal elements produce equal keys. Used for
/// deduplication during ball enumeration and for failure witnesses.
std::string group_key(const Word& a);
std::string group_key(const Automorphism& a);
std::string group_key(const IntMatrix& a);

template <class T>
concept GroupElement = requires(const T& a, const T& b) {
  { group_mul(a, b) } -> std::convertible_to<T>;
  { group_inv(a) } -> std::convertible_to<T>;
  { group_id(a) } -> std::convertible_to<T>;
  { group_eq(a, b) } -> std::convertible_to<bool>;
  { group_key(a) } -> std::convertible_to<std::string>;
};

template <GroupElement T>
T group_pow(const T& a, long long k) {
  T base = k >= 0 ? a : group_inv(a);
  long long e = k >= 0 ? k : -k;
  T out = group_id(a);
  while (e > 0) {
    if (e & 1) out = group_mul(out, base);
    base = group_mul(base, base);
    e >>= 1;
  }
  return out;
}

template <GroupElement T>
bool group_is_id(const T& a) {
  return group_eq(a, group_id(a));
}

}  // namespace holkit

#endif  // HOLKIT_GROUP_HPP_
