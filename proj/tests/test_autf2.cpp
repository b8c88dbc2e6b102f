#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unordered_set>

#include "holkit/autf2.hpp"
#include "holkit/expr.hpp"
#include "test_support.hpp"

using namespace holkit;
using namespace holkit::testing;

namespace {
const Alphabet ab = Alphabet::ab();
}

TEST_CASE("basis satisfies the whole relator suite") {
  CheckReport r = check_relators(autf2_presentation(), autf2_assignment());
  CHECK(r.passed);
  CHECK(r.checks.size() == 11);

  // The tau-conjugation subset alone also passes.
  Presentation full = autf2_presentation();
  Presentation tau_only;
  tau_only.generators = full.generators;
  for (size_t i = 5; i < full.relators.size(); ++i) tau_only.add_relator(full.relator_names[i], full.relators[i]);
  CHECK(check_relators(tau_only, autf2_assignment()).passed);
}

TEST_CASE("project_gl2 sends the basis to P, X, Y and kills inner") {
  const AutF2Basis& b = AutF2Basis::get();
  CHECK(project_gl2(b.tb).mat.is_identity());
  CHECK(project_gl2(Automorphism::identity(2)).mat.is_identity());
  CHECK(project_gl2(b.x).mat == gl2_X());
  CHECK(gl2_X().pow(4).is_identity());
}

TEST_CASE("gl2_decompose on the small cases") {
  Gl2Decomposition id = gl2_decompose(IntMatrix::identity(2));
  CHECK(id.r == 0);
  CHECK(id.u.is_identity());
  CHECK(id.s == 0);

  Gl2Decomposition minus = gl2_decompose(IntMatrix{{-1, 0}, {0, -1}});
  CHECK(minus.r == 0);
  CHECK(minus.u.is_identity());
  CHECK(minus.s == 1);

  Gl2Decomposition xy = gl2_decompose(gl2_X() * gl2_Y());
  CHECK(gl2_evaluate(xy) == gl2_X() * gl2_Y());
  CHECK(xy.r == 0);
  CHECK(to_string(xy.u, Alphabet({"x", "y"})) == "x y");
}

TEST_CASE("gl2_decompose round-trips and matches the BFS oracle") {
  auto rng = make_rng(515);
  std::uniform_int_distribution<int> len(0, 8);
  for (int trial = 0; trial < 400; ++trial) {
    // Random products of the generator matrices.
    IntMatrix m = IntMatrix::identity(2);
    int n = len(rng);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i < n; ++i) {
      switch (pick(rng)) {
        case 0: m = m * gl2_P(); break;
        case 1: m = m * gl2_X(); break;
        default: m = m * gl2_Y(); break;
      }
    }
    Gl2Decomposition d = gl2_decompose(m);
    CHECK(gl2_evaluate(d) == m);
    // Letter restriction: x only positive, alternating syllables.
    for (size_t i = 0; i < d.u.length(); ++i) {
      Letter l = d.u.letter_at(i);
      if (letter_gen(l) == 0) CHECK(letter_sign(l) == 1);
      if (i + 1 < d.u.length()) CHECK(letter_gen(l) != letter_gen(d.u.letter_at(i + 1)));
    }
    // Determinism.
    CHECK(gl2_decompose(m) == d);
  }
  // Against the exhaustive oracle on short words (radius 8).
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m = IntMatrix::identity(2);
    std::uniform_int_distribution<int> pick(0, 2);
    int n = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int i = 0; i < n; ++i) {
      switch (pick(rng)) {
        case 0: m = m * gl2_P(); break;
        case 1: m = m * gl2_X(); break;
        default: m = m * gl2_Y(); break;
      }
    }
    Gl2Decomposition fast = gl2_decompose(m);
    auto slow = gl2_bfs_oracle(m, 8);
    REQUIRE(slow.has_value());
    CHECK(gl2_evaluate(*slow) == m);
    if (fast.u.length() <= 8) {
      CHECK(fast.u == slow->u);
      CHECK(fast.r == slow->r);
      CHECK(fast.s == slow->s);
    }
  }
}

TEST_CASE("normal-form triples evaluate injectively") {
  // Distinct (r, u, s) with |u| <= 6 give distinct matrices, so the
  // decomposition really is unique, not merely deterministic.
  std::vector<Word> words = {Word(2)};
  std::vector<Word> layer = words;
  for (int len = 1; len <= 6; ++len) {
    std::vector<Word> next;
    for (const Word& u : layer) {
      Letter last = u.length() ? u.letter_at(u.length() - 1) : 0;
      if (u.length() == 0 || letter_gen(last) == 1) next.push_back(multiply(u, generator_word(2, 0)));
      if (u.length() == 0 || letter_gen(last) == 0) {
        next.push_back(multiply(u, generator_word(2, 1)));
        next.push_back(multiply(u, generator_word(2, 1, -1)));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::unordered_set<std::string> seen;
  for (const Word& u : words)
    for (int r : {0, 1})
      for (int s : {0, 1}) CHECK(seen.insert(gl2_evaluate({r, u, s}).str()).second);
}

TEST_CASE("gl2_decompose handles large entries") {
  IntMatrix m = IntMatrix{{1, 1000000}, {0, 1}};
  Gl2Decomposition d = gl2_decompose(m);
  CHECK(gl2_evaluate(d) == m);
  IntMatrix big = (gl2_Y() * gl2_X()).pow(25) * gl2_P();
  CHECK(gl2_evaluate(gl2_decompose(big)) == big);
}

TEST_CASE("normal form of the identity and inner elements") {
  const AutF2Basis& b = AutF2Basis::get();
  NormalForm nf_id = normal_form(Automorphism::identity(2));
  CHECK(nf_id == NormalForm{});

  NormalForm nf_ta = normal_form(b.ta);
  CHECK(nf_ta.r == 0);
  CHECK(nf_ta.u.is_identity());
  CHECK(nf_ta.s == 0);
  CHECK(nf_ta.w == generator_word(2, 0));
}

TEST_CASE("ta p has the pinned normal form p tb") {
  const AutF2Basis& b = AutF2Basis::get();
  NormalForm nf = normal_form(compose(b.ta, b.p));
  CHECK(nf.r == 1);
  CHECK(nf.u.is_identity());
  CHECK(nf.s == 0);
  CHECK(nf.w == generator_word(2, 1));
  CHECK(to_string(nf) == "p^1 · e · x^0 · tb");
}

TEST_CASE("normal form round-trips and is unique across spellings") {
  auto rng = make_rng(626);
  for (int trial = 0; trial < 500; ++trial) {
    Automorphism f = random_basis_product(rng, 12);
    NormalForm nf = normal_form(f);
    CHECK(evaluate(nf) == f);

    // Insert a relator subword: same automorphism, same normal form.
    const AutF2Basis& b = AutF2Basis::get();
    Automorphism g = compose(compose(f, power(b.p, 2)), power(b.x, 4));
    CHECK(g == f);
    CHECK(normal_form(g) == nf);

    // Kernel property: projection trivial iff r, u, s all trivial.
    bool kernel = project_gl2(f).mat.is_identity();
    bool trivial_prefix = nf.r == 0 && nf.u.is_identity() && nf.s == 0;
    CHECK(kernel == trivial_prefix);
  }
}

TEST_CASE("enumerate_ball small groups") {
  const AutF2Basis& b = AutF2Basis::get();
  std::vector<Automorphism> only_p = {b.p};
  CHECK(enumerate_ball(only_p, 0).size() == 1);
  CHECK(enumerate_ball(only_p, 5).size() == 2);
  std::vector<Automorphism> only_x = {b.x};
  CHECK(enumerate_ball(only_x, 10).size() == 4);
  std::vector<Automorphism> d4 = {b.p, b.x};
  CHECK(enumerate_ball(d4, 8).size() == 8);
}

TEST_CASE("enumerate_ball is monotone and deterministic") {
  auto gens = autf2_assignment();
  std::vector<size_t> sizes;
  for (int r = 0; r <= 3; ++r) sizes.push_back(enumerate_ball(gens, r).size());
  for (size_t i = 1; i < sizes.size(); ++i) CHECK(sizes[i] >= sizes[i - 1]);
  auto again = enumerate_ball(gens, 3);
  CHECK(again.size() == sizes[3]);
  // BFS order is stable, and each ball is a prefix of the next.
  auto first = enumerate_ball(gens, 2);
  auto second = enumerate_ball(gens, 2);
  for (size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
  auto bigger = enumerate_ball(gens, 3);
  REQUIRE(bigger.size() >= first.size());
  for (size_t i = 0; i < first.size(); ++i) CHECK(bigger[i] == first[i]);
}

TEST_CASE("enumerate_ball honors the cap") {
  auto gens = autf2_assignment();
  CHECK_THROWS_AS(enumerate_ball(gens, 4, 50), resource_limit_error);
}

TEST_CASE("order_of") {
  const AutF2Basis& b = AutF2Basis::get();
  CHECK(order_of(b.p, 10) == OrderResult{true, 2});
  CHECK(order_of(b.x, 10) == OrderResult{true, 4});
  CHECK(order_of(Automorphism::identity(2), 5) == OrderResult{true, 1});
  CHECK_FALSE(order_of(b.ta, 50).finite);
  CHECK_FALSE(order_of(b.y, 12).finite);
}

TEST_CASE("gl2 finite order test") {
  CHECK(gl2_has_finite_order(gl2_X()));
  CHECK(gl2_has_finite_order(gl2_Y()));
  CHECK(gl2_has_finite_order(gl2_P()));
  CHECK_FALSE(gl2_has_finite_order(IntMatrix{{1, 1}, {0, 1}}));
}
