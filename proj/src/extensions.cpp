#include "holkit/extensions.hpp"

#include <sstream>

namespace holkit {

HolElement::HolElement(Word g, Automorphism alpha) : free_part(std::move(g)), aut_part(std::move(alpha)) {
  if (free_part.rank() != aut_part.rank())
    throw mismatch_error("holomorph element parts over different alphabets");
}

HolElement HolElement::identity(int rank) { return HolElement(Word(rank), Automorphism::identity(rank)); }

HolElement hol_multiply(const HolElement& u, const HolElement& v) {
  if (u.rank() != v.rank()) throw mismatch_error("holomorph product across different alphabets");
  return HolElement(multiply(u.free_part, u.aut_part.apply(v.free_part)), compose(u.aut_part, v.aut_part));
}

HolElement hol_inverse(const HolElement& u) {
  Automorphism ai = invert(u.aut_part);
  return HolElement(ai.apply(invert(u.free_part)), ai);
}

Automorphism embed_E(const HolElement& h) {
  int r = h.rank();
  std::vector<Word> fwd, bwd;
  fwd.reserve(static_cast<size_t>(r) + 1);
  bwd.reserve(static_cast<size_t>(r) + 1);
  HolElement hi = hol_inverse(h);
  for (int g = 0; g < r; ++g) {
    fwd.push_back(h.aut_part.image(g).promoted(r + 1));
    bwd.push_back(hi.aut_part.image(g).promoted(r + 1));
  }
  Word z = generator_word(r + 1, r);
  fwd.push_back(conjugate(invert(h.free_part).promoted(r + 1), z));
  bwd.push_back(conjugate(invert(hi.free_part).promoted(r + 1), z));
  return verify_automorphism(Endomorphism(r + 1, std::move(fwd)), Endomorphism(r + 1, std::move(bwd)));
}

std::string to_string(const HolElement& h, const Alphabet& alphabet) {
  return "hol(" + to_string(h.free_part, alphabet) + ", " + to_string(h.aut_part, alphabet) + ")";
}

std::string group_key(const HolElement& a) {
  std::string key = group_key(a.free_part);
  key += '|';
  key += group_key(a.aut_part);
  return key;
}

TowerElement TowerElement::base(const HolElement& h) {
  if (h.rank() != 2) throw mismatch_error("tower base must be a Hol(F_2) element");
  TowerElement t;
  t.level_ = 1;
  t.free_ = h.free_part;
  t.base_aut_ = h.aut_part;
  return t;
}

TowerElement TowerElement::identity(int level) {
  if (level < 1) throw error("tower level must be >= 1");
  if (level == 1) return base(HolElement::identity(2));
  return make(Word(level + 1), identity(level - 1));
}

TowerElement TowerElement::make(Word free_part, TowerElement lower) {
  if (free_part.rank() != lower.level() + 2)
    throw mismatch_error("tower free part rank must be level+1 (got rank " + std::to_string(free_part.rank()) +
                         " over lower level " + std::to_string(lower.level()) + ")");
  TowerElement t;
  t.level_ = lower.level() + 1;
  t.free_ = std::move(free_part);
  t.lower_ = std::make_shared<const TowerElement>(std::move(lower));
  return t;
}

TowerElement TowerElement::from_word(const Word& w) {
  int level = w.rank() - 1;
  if (level < 1) throw mismatch_error("tower free part needs rank >= 2");
  if (level == 1) return base(HolElement::from_word(w));
  return make(w, identity(level - 1));
}

TowerElement TowerElement::letter_conjugator(const Word& c) {
  return from_word(invert(c));
}

const Automorphism& TowerElement::base_aut() const {
  if (level_ != 1) throw error("base_aut only exists at level 1");
  return base_aut_;
}

const TowerElement& TowerElement::lower() const {
  if (level_ < 2) throw error("level-1 element has no tower lower part");
  return *lower_;
}

bool TowerElement::operator==(const TowerElement& other) const {
  if (level_ != other.level_ || free_ != other.free_) return false;
  if (level_ == 0) return true;
  if (level_ == 1) return base_aut_ == other.base_aut_;
  return *lower_ == *other.lower_;
}

TowerElement tower_multiply(const TowerElement& u, const TowerElement& v) {
  if (u.level() != v.level()) throw mismatch_error("tower product across different levels");
  if (u.level() == 1)
    return TowerElement::base(hol_multiply(HolElement(u.free_part(), u.base_aut()), HolElement(v.free_part(), v.base_aut())));
  Automorphism act = tower_action(u.lower());
  return TowerElement::make(multiply(u.free_part(), act.apply(v.free_part())), tower_multiply(u.lower(), v.lower()));
}

TowerElement tower_inverse(const TowerElement& u) {
  if (u.level() == 1) return TowerElement::base(hol_inverse(HolElement(u.free_part(), u.base_aut())));
  TowerElement li = tower_inverse(u.lower());
  return TowerElement::make(tower_action(li, invert(u.free_part())), li);
}

Automorphism tower_action(const TowerElement& g) {
  if (g.level() == 1) return embed_E(HolElement(g.free_part(), g.base_aut()));
  int r = g.rank() + 1;  // acts on F_{level+2}
  Automorphism lower_act = tower_action(g.lower());
  TowerElement gi = tower_inverse(g);
  Automorphism lower_act_inv = tower_action(gi.lower());
  std::vector<Word> fwd, bwd;
  fwd.reserve(static_cast<size_t>(r));
  bwd.reserve(static_cast<size_t>(r));
  for (int gen = 0; gen < r - 1; ++gen) {
    fwd.push_back(lower_act.image(gen).promoted(r));
    bwd.push_back(lower_act_inv.image(gen).promoted(r));
  }
  Word top = generator_word(r, r - 1);
  fwd.push_back(conjugate(invert(g.free_part()).promoted(r), top));
  bwd.push_back(conjugate(invert(gi.free_part()).promoted(r), top));
  return verify_automorphism(Endomorphism(r, std::move(fwd)), Endomorphism(r, std::move(bwd)));
}

Word tower_action(const TowerElement& g, const Word& w) {
  if (w.rank() != g.rank() + 1)
    throw mismatch_error("tower action expects a word of rank level+2");
  return tower_action(g).apply(w);
}

TowerElement project(const TowerElement& u) {
  if (u.level() < 2) throw error("project needs level >= 2");
  return u.lower();
}

TowerElement section(const TowerElement& v) { return TowerElement::make(Word(v.rank() + 1), v); }

TowerElement tower_include(const TowerElement& h) {
  return TowerElement::make(h.free_part().promoted(h.rank() + 1), h);
}

std::string to_string(const TowerElement& t) {
  std::ostringstream out;
  out << "tower(" << t.level() << ", " << to_string(t.free_part());
  if (t.is_base())
    out << ", " << to_string(t.base_aut(), Alphabet::numbered(2));
  else
    out << ", " << to_string(t.lower());
  out << ")";
  return out.str();
}

std::string group_key(const TowerElement& a) {
  std::string key = std::to_string(a.level());
  key += ':';
  key += group_key(a.free_part());
  key += '|';
  if (a.is_base())
    key += group_key(a.base_aut());
  else
    key += group_key(a.lower());
  return key;
}

}  // namespace holkit
