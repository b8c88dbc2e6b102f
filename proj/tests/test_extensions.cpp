#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <unordered_set>

#include "holkit/autf2.hpp"
#include "holkit/expr.hpp"
#include "holkit/extensions.hpp"
#include "test_support.hpp"

using namespace holkit;
using namespace holkit::testing;

namespace {

const Alphabet ab = Alphabet::ab();
Word W(const char* text) { return parse_word(text, ab); }

HolElement random_hol(std::mt19937_64& rng, int maxlen) {
  return HolElement(random_reduced(rng, 2, maxlen), random_basis_product(rng, maxlen));
}

TowerElement random_tower(std::mt19937_64& rng, int level, int maxlen) {
  if (level == 1) return TowerElement::base(random_hol(rng, maxlen));
  return TowerElement::make(random_reduced(rng, level + 1, maxlen), random_tower(rng, level - 1, maxlen));
}

// Oracle: the action of a tower element computed independently of
// tower_action, by walking the recursion one level at a time.
Word action_oracle(const TowerElement& g, const Word& w) {
  int r = g.rank() + 1;
  std::vector<Word> images;
  for (int i = 0; i < r - 1; ++i) {
    Word xi = generator_word(r - 1, i);
    Word img = g.is_base() ? g.base_aut().apply(xi) : action_oracle(g.lower(), xi);
    images.push_back(img.promoted(r));
  }
  images.push_back(conjugate(invert(g.free_part()).promoted(r), generator_word(r, r - 1)));
  return substitute(w, images);
}

}  // namespace

TEST_CASE("hol multiplication follows the semidirect law") {
  HolElement a = HolElement::from_word(W("a"));
  HolElement b = HolElement::from_word(W("b"));
  CHECK(hol_multiply(a, b) == HolElement::from_word(W("a b")));

  const AutF2Basis& basis = AutF2Basis::get();
  HolElement p = HolElement::from_aut(basis.p);
  CHECK(hol_multiply(p, a) == HolElement(W("b"), basis.p));
}

TEST_CASE("hol inverse and group laws") {
  auto rng = make_rng(444);
  for (int trial = 0; trial < 500; ++trial) {
    HolElement u = random_hol(rng, 5);
    HolElement v = random_hol(rng, 5);
    HolElement w = random_hol(rng, 5);
    CHECK(hol_multiply(u, hol_inverse(u)) == HolElement::identity(2));
    CHECK(hol_multiply(hol_inverse(u), u) == HolElement::identity(2));
    CHECK(hol_multiply(hol_multiply(u, v), w) == hol_multiply(u, hol_multiply(v, w)));
    CHECK(hol_multiply(u, HolElement::identity(2)) == u);
  }
}

TEST_CASE("embed_E fixes the base letters and conjugates the new letter") {
  // The free part g acts on the new letter z by z -> g^-1 z g, the direction
  // that makes the embedding multiplicative under f-after-g composition.
  HolElement a = HolElement::from_word(W("a"));
  Automorphism e = embed_E(a);
  CHECK(e.image(0) == parse_word("x1", Alphabet::numbered(3)));
  CHECK(e.image(1) == parse_word("x2", Alphabet::numbered(3)));
  CHECK(e.image(2) == parse_word("x1^-1 x3 x1", Alphabet::numbered(3)));

  // A pure automorphism extends fixing the new letter.
  const AutF2Basis& basis = AutF2Basis::get();
  Automorphism ep = embed_E(HolElement::from_aut(basis.p));
  CHECK(ep.image(2) == parse_word("x3", Alphabet::numbered(3)));
  CHECK(ep.image(0) == parse_word("x2", Alphabet::numbered(3)));
  CHECK(embed_E(HolElement::identity(2)) == Automorphism::identity(3));
}

TEST_CASE("embed_E is a homomorphism") {
  auto rng = make_rng(555);
  for (int trial = 0; trial < 300; ++trial) {
    HolElement u = random_hol(rng, 5);
    HolElement v = random_hol(rng, 5);
    CHECK(embed_E(hol_multiply(u, v)) == compose(embed_E(u), embed_E(v)));
    CHECK(embed_E(hol_inverse(u)) == invert(embed_E(u)));
  }
}

TEST_CASE("embed_E is injective on the radius-4 ball") {
  const AutF2Basis& basis = AutF2Basis::get();
  std::vector<HolElement> gens = {HolElement::from_word(W("a")), HolElement::from_word(W("b")),
                                  HolElement::from_aut(basis.p), HolElement::from_aut(basis.x)};
  std::vector<HolElement> ball = enumerate_ball(gens, 4);
  std::unordered_set<std::string> image_keys;
  for (const auto& h : ball) CHECK(image_keys.insert(group_key(embed_E(h))).second);
}

TEST_CASE("tower identity and levels") {
  TowerElement id3 = TowerElement::identity(3);
  CHECK(id3.level() == 3);
  CHECK(id3.rank() == 4);
  auto rng = make_rng(666);
  TowerElement v = random_tower(rng, 3, 4);
  CHECK(tower_multiply(id3, v) == v);
  CHECK(tower_multiply(v, id3) == v);
  CHECK_THROWS_AS(tower_multiply(v, TowerElement::identity(2)), mismatch_error);
}

TEST_CASE("letter conjugator acts by conjugation on the top letter") {
  // The level-1 element built from the word x2 conjugates x3 by its stored
  // free part inverse; letter_conjugator(c) stores c^-1 so that x3 -> c x3 c^-1.
  TowerElement g = TowerElement::letter_conjugator(parse_word("x2", Alphabet::numbered(2)));
  Word x3 = parse_word("x3", Alphabet::numbered(3));
  CHECK(tower_action(g, x3) == parse_word("x2 x3 x2^-1", Alphabet::numbered(3)));
  CHECK(tower_action(g, parse_word("x1", Alphabet::numbered(3))) == parse_word("x1", Alphabet::numbered(3)));

  TowerElement raw = TowerElement::from_word(parse_word("x2", Alphabet::numbered(2)));
  CHECK(tower_action(raw, x3) == parse_word("x2^-1 x3 x2", Alphabet::numbered(3)));
}

TEST_CASE("tower action with trivial free part fixes the top letter") {
  const AutF2Basis& basis = AutF2Basis::get();
  TowerElement g = section(TowerElement::base(HolElement::from_aut(basis.p)));
  Word x4 = parse_word("x4", Alphabet::numbered(4));
  CHECK(tower_action(g, x4) == x4);
}

TEST_CASE("tower associativity at levels 1 to 4") {
  auto rng = make_rng(777);
  for (int level = 1; level <= 4; ++level) {
    int trials = level <= 2 ? 400 : 100;
    for (int trial = 0; trial < trials; ++trial) {
      TowerElement u = random_tower(rng, level, 5);
      TowerElement v = random_tower(rng, level, 5);
      TowerElement w = random_tower(rng, level, 5);
      CHECK(tower_multiply(tower_multiply(u, v), w) == tower_multiply(u, tower_multiply(v, w)));
      CHECK(tower_multiply(u, tower_inverse(u)) == TowerElement::identity(level));
      CHECK(tower_multiply(tower_inverse(u), u) == TowerElement::identity(level));
    }
  }
}

TEST_CASE("tower action is a homomorphism and matches the oracle") {
  auto rng = make_rng(888);
  for (int level = 1; level <= 3; ++level) {
    for (int trial = 0; trial < 60; ++trial) {
      TowerElement g = random_tower(rng, level, 4);
      TowerElement h = random_tower(rng, level, 4);
      CHECK(tower_action(tower_multiply(g, h)) == compose(tower_action(g), tower_action(h)));
      Word w = random_reduced(rng, level + 2, 6);
      CHECK(tower_action(g, w) == action_oracle(g, w));
    }
  }
}

TEST_CASE("tower action fixes the base subgroup setwise and conjugates the top") {
  auto rng = make_rng(999);
  for (int trial = 0; trial < 100; ++trial) {
    TowerElement g = random_tower(rng, 3, 4);
    Automorphism act = tower_action(g);
    // Images of x1..x4 avoid the top letter x5.
    for (int i = 0; i < 4; ++i)
      for (Letter l : act.image(i).letters()) CHECK(letter_gen(l) != 4);
    // The top letter maps to a conjugate of itself by a lower word.
    Word top_image = act.image(4);
    long long top_count = 0;
    for (Letter l : top_image.letters())
      if (letter_gen(l) == 4) {
        ++top_count;
        CHECK(letter_sign(l) == 1);
      }
    CHECK(top_count == 1);
  }
}

TEST_CASE("project and section") {
  auto rng = make_rng(1111);
  for (int trial = 0; trial < 200; ++trial) {
    TowerElement v = random_tower(rng, 2, 4);
    CHECK(project(section(v)) == v);
    TowerElement u = random_tower(rng, 3, 4);
    TowerElement w = random_tower(rng, 3, 4);
    CHECK(project(tower_multiply(u, w)) == tower_multiply(project(u), project(w)));
  }
  // Kernel elements are the pure free parts.
  TowerElement k = TowerElement::from_word(parse_word("x4", Alphabet::numbered(4)));
  CHECK(k.level() == 3);
  CHECK(project(k) == TowerElement::identity(2));
  CHECK_THROWS_AS(project(TowerElement::base(HolElement::identity(2))), error);
}

TEST_CASE("tower_include is a homomorphism that keeps acting above") {
  auto rng = make_rng(2222);
  for (int trial = 0; trial < 150; ++trial) {
    TowerElement u = random_tower(rng, 2, 4);
    TowerElement v = random_tower(rng, 2, 4);
    CHECK(tower_include(tower_multiply(u, v)) == tower_multiply(tower_include(u), tower_include(v)));
  }
  // Including the base word x2 keeps conjugating every new letter.
  TowerElement t = tower_include(TowerElement::from_word(parse_word("x2^-1", Alphabet::numbered(2))));
  CHECK(t.level() == 2);
  Automorphism act = tower_action(t);
  CHECK(act.image(2) == parse_word("x2 x3 x2^-1", Alphabet::numbered(4)));
  CHECK(act.image(3) == parse_word("x2 x4 x2^-1", Alphabet::numbered(4)));
}

TEST_CASE("holomorph arithmetic is rank generic") {
  // Hol(F_3) with a cycling automorphism.
  Alphabet x3 = Alphabet::numbered(3);
  Endomorphism cycle(3, {parse_word("x2", x3), parse_word("x3", x3), parse_word("x1", x3)});
  Endomorphism cycle_back(3, {parse_word("x3", x3), parse_word("x1", x3), parse_word("x2", x3)});
  Automorphism rho = verify_automorphism(cycle, cycle_back);
  HolElement g(parse_word("x1 x2", x3), rho);
  CHECK(hol_multiply(g, hol_inverse(g)) == HolElement::identity(3));
  CHECK(order_of(HolElement::from_aut(rho), 10) == OrderResult{true, 3});

  // Its embedding acts on F_4.
  Automorphism e = embed_E(g);
  CHECK(e.rank() == 4);
  CHECK(e.image(0) == parse_word("x2", Alphabet::numbered(4)));
  CHECK(e.image(3) == parse_word("(x1 x2)^-1 x4 x1 x2", Alphabet::numbered(4)));

  auto rng = make_rng(4444);
  for (int trial = 0; trial < 50; ++trial) {
    HolElement u(random_reduced(rng, 3, 5), trial % 2 ? rho : invert(rho));
    HolElement v(random_reduced(rng, 3, 5), rho);
    CHECK(embed_E(hol_multiply(u, v)) == compose(embed_E(u), embed_E(v)));
  }
}

TEST_CASE("tower serialization keys separate distinct elements") {
  auto rng = make_rng(3333);
  std::unordered_set<std::string> keys;
  size_t fresh = 0;
  for (int trial = 0; trial < 100; ++trial) {
    TowerElement t = random_tower(rng, 2, 3);
    if (keys.insert(group_key(t)).second) ++fresh;
  }
  CHECK(fresh > 50);  // collisions only for genuinely equal draws
}
