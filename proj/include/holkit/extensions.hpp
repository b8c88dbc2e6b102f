// Holomorphs Hol(F_r) = F_r x| Aut(F_r), the embedding of Hol(F_r) into
// Aut(F_{r+1}), and the iterated split extensions
//
//   level 1: Hol(F_2),   level n >= 2: F_{n+1} x| (level n-1),
//
// where a level-(n-1) element acts on F_{n+1} through embed_E: it moves
// x_1..x_n by its own action and conjugates the new letter x_{n+1} by the
// inverse of its free part. That sign makes embed_E an injective
// homomorphism under the compose(f, g) = f-after-g convention; the element
// whose action conjugates the new letter by a word c is letter_conjugator(c)
// (its stored free part is c^-1).

#ifndef HOLKIT_EXTENSIONS_HPP_
#define HOLKIT_EXTENSIONS_HPP_

#include <memory>
#include <string>

#include "holkit/group.hpp"
#include "holkit/morphisms.hpp"
#include "holkit/words.hpp"

namespace holkit {

/// An element g * alpha of Hol(F_r): free part g and automorphism part alpha
/// over one alphabet. Identity is (e, id).
struct HolElement {
  Word free_part;
  Automorphism aut_part;

  HolElement() = default;
  HolElement(Word g, Automorphism alpha);

  static HolElement identity(int rank);
  static HolElement from_word(const Word& g) { return HolElement(g, Automorphism::identity(g.rank())); }
  static HolElement from_aut(const Automorphism& a) { return HolElement(Word(a.rank()), a); }

  int rank() const { return free_part.rank(); }
  bool operator==(const HolElement& other) const = default;
};

/// Semidirect law (g1, a1)(g2, a2) = (g1 * a1(g2), a1 o a2).
HolElement hol_multiply(const HolElement& u, const HolElement& v);

/// (g, a)^-1 = (a^-1(g^-1), a^-1).
HolElement hol_inverse(const HolElement& u);

/// The embedding Hol(F_r) -> Aut(F_r * Z) = Aut(F_{r+1}): (g, a) acts as a
/// on x_1..x_r and sends the new letter z to g^-1 z g. An injective
/// homomorphism: embed_E(uv) = compose(embed_E(u), embed_E(v)).
Automorphism embed_E(const HolElement& h);

std::string to_string(const HolElement& h, const Alphabet& alphabet);

/// An element of the iterated extension at a given level. Level 1 wraps a
/// Hol(F_2) element; level n >= 2 pairs a free part in F_{n+1} with a lower
/// element of level n-1. Values are immutable; lower parts are shared.
class TowerElement {
 public:
  TowerElement() = default;

  /// Level-1 element from a Hol(F_2) pair.
  static TowerElement base(const HolElement& h);
  static TowerElement identity(int level);
  /// Level-n element (free part in F_{n+1}, lower of level n-1).
  static TowerElement make(Word free_part, TowerElement lower);
  /// The pure free-part element (w, id) at the level matching w's rank n+1.
  static TowerElement from_word(const Word& w);
  /// The level-n element with trivial lower part whose action on F_{n+2}
  /// conjugates the top letter x_{n+2} by c (c over F_{n+1}).
  static TowerElement letter_conjugator(const Word& c);

  int level() const { return level_; }
  int rank() const { return level_ + 1; }  // free part lives in F_{level+1}
  const Word& free_part() const { return free_; }
  bool is_base() const { return level_ == 1; }
  const Automorphism& base_aut() const;
  const TowerElement& lower() const;

  bool operator==(const TowerElement& other) const;

 private:
  int level_ = 0;
  Word free_;
  Automorphism base_aut_;                        // level 1 only
  std::shared_ptr<const TowerElement> lower_;    // level >= 2 only
};

TowerElement tower_multiply(const TowerElement& u, const TowerElement& v);
TowerElement tower_inverse(const TowerElement& u);

/// The action of a level-n element on F_{n+2} as a certified automorphism:
/// the lower part moves x_1..x_{n+1}, and x_{n+2} is conjugated by the
/// inverse of the free part. A homomorphism in the element argument.
Automorphism tower_action(const TowerElement& g);
Word tower_action(const TowerElement& g, const Word& w);

/// Quotient to the lower level (kernel = pure free parts) and its section.
TowerElement project(const TowerElement& u);            // level >= 2
TowerElement section(const TowerElement& v);            // level n -> n+1, free part e

/// The inclusion of level n into level n+1 that keeps acting on everything
/// above: free part carried along, lower part the whole element. A
/// homomorphism; iterating it realizes lower-level elements inside any
/// higher level with their conjugation action intact.
TowerElement tower_include(const TowerElement& h);

std::string to_string(const TowerElement& t);

inline HolElement group_mul(const HolElement& a, const HolElement& b) { return hol_multiply(a, b); }
inline HolElement group_inv(const HolElement& a) { return hol_inverse(a); }
inline HolElement group_id(const HolElement& like) { return HolElement::identity(like.rank()); }
inline bool group_eq(const HolElement& a, const HolElement& b) { return a == b; }
std::string group_key(const HolElement& a);

inline TowerElement group_mul(const TowerElement& a, const TowerElement& b) { return tower_multiply(a, b); }
inline TowerElement group_inv(const TowerElement& a) { return tower_inverse(a); }
inline TowerElement group_id(const TowerElement& like) { return TowerElement::identity(like.level()); }
inline bool group_eq(const TowerElement& a, const TowerElement& b) { return a == b; }
std::string group_key(const TowerElement& a);

}  // namespace holkit

#endif  // HOLKIT_EXTENSIONS_HPP_
