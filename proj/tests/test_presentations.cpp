#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "holkit/autf2.hpp"
#include "holkit/expr.hpp"
#include "holkit/presentations.hpp"
#include "test_support.hpp"

using namespace holkit;
using namespace holkit::testing;

TEST_CASE("gl2 presentation passes under the candidate matrices") {
  CheckReport r = check_relators(gl2_presentation(), gl2_assignment());
  CHECK(r.passed);
  CHECK(r.checks.size() == 5);
}

TEST_CASE("identity assignment satisfies proper-power relators") {
  Presentation p;
  p.generators = Alphabet({"g", "h"});
  p.add_relator("g^2", parse_relator("g^2", p.generators));
  p.add_relator("h^3", parse_relator("h^3", p.generators));
  std::vector<IntMatrix> ident = {IntMatrix::identity(2), IntMatrix::identity(2)};
  CHECK(check_relators(p, ident).passed);
}

TEST_CASE("swapped assignment fails with a witness") {
  auto basis = autf2_assignment();
  std::swap(basis[1], basis[2]);  // x <-> y
  CheckReport r = check_relators(autf2_presentation(), basis);
  CHECK_FALSE(r.passed);
  bool witness_seen = false;
  for (const auto& c : r.checks)
    if (!c.passed && !c.witness.empty()) witness_seen = true;
  CHECK(witness_seen);
}

TEST_CASE("check_relators is conjugation invariant") {
  auto rng = make_rng(4242);
  auto basis = autf2_assignment();
  Automorphism h = random_basis_product(rng, 5);
  std::vector<Automorphism> conjugated;
  for (const auto& g : basis) conjugated.push_back(compose(compose(h, g), invert(h)));
  CHECK(check_relators(autf2_presentation(), conjugated).passed);
}

TEST_CASE("verify_substitution accepts the identity substitution") {
  Presentation p = gl2_presentation();
  auto mats = gl2_assignment();
  std::vector<Word> id_map;
  for (int g = 0; g < p.generators.rank(); ++g) id_map.push_back(generator_word(p.generators.rank(), g));
  CheckReport r = verify_substitution(p, p, id_map, id_map, mats);
  CHECK(r.passed);
}

TEST_CASE("verify_substitution certifies a real generator change and is symmetric") {
  // In GL2(Z): replace X by X' = P X (det -1 generator change).
  Presentation p_old = gl2_presentation();
  Alphabet new_gens({"P", "Xp", "Y"});
  Presentation p_new;
  p_new.generators = new_gens;
  // Relators for P, P Xp (= X rewritten), Y: spell old relators through X = P Xp.
  for (const char* rel : {"(P Xp)^4", "P^2", "(P P Xp)^2", "(P Y)^2", "(P Xp)^2 = Y^3"})
    p_new.add_relator(rel, parse_relator(rel, new_gens));
  std::vector<Word> old_in_new = {parse_word("P", new_gens), parse_word("P Xp", new_gens), parse_word("Y", new_gens)};
  std::vector<Word> new_in_old = {parse_word("P", p_old.generators), parse_word("P X", p_old.generators),
                                  parse_word("Y", p_old.generators)};
  auto mats = gl2_assignment();
  CheckReport forward = verify_substitution(p_old, p_new, old_in_new, new_in_old, mats);
  CHECK(forward.passed);

  // Symmetric direction: start from the induced assignment.
  std::vector<IntMatrix> induced;
  for (const Word& w : new_in_old) induced.push_back(evaluate_word(w, mats, IntMatrix::identity(2)));
  CheckReport backward = verify_substitution(p_new, p_old, new_in_old, old_in_new, induced);
  CHECK(backward.passed);
}

TEST_CASE("verify_substitution reports failures with witnesses") {
  Presentation p_old = gl2_presentation();
  Presentation p_new;
  p_new.generators = Alphabet({"P", "X", "Y"});
  p_new.add_relator("X^2", parse_relator("X^2", p_new.generators));  // false for X
  std::vector<Word> id_map = {parse_word("P", p_new.generators), parse_word("X", p_new.generators),
                              parse_word("Y", p_new.generators)};
  CheckReport r = verify_substitution(p_old, p_new, id_map, id_map, gl2_assignment());
  CHECK_FALSE(r.passed);
  CHECK(r.first_failure() == "new/X^2");
}

TEST_CASE("degenerate amalgam with factor2 = edge") {
  // Ambient = free group on g, h; factor1 everything, factor2 just the edge.
  Presentation ambient;
  ambient.generators = Alphabet({"g", "h"});
  AmalgamFactor f1{ambient, {"g", "h"}};
  Presentation edge_only;
  edge_only.generators = Alphabet({"g"});
  AmalgamFactor f2{edge_only, {"g"}};
  std::vector<Word> assignment = {generator_word(2, 0), generator_word(2, 1)};
  CheckReport r = verify_amalgam(ambient, f1, f2, {"g"}, assignment);
  CHECK(r.passed);
}

TEST_CASE("verify_amalgam flags uncovered generators") {
  Presentation ambient;
  ambient.generators = Alphabet({"g", "h"});
  Presentation sub;
  sub.generators = Alphabet({"g"});
  AmalgamFactor f1{sub, {"g"}};
  AmalgamFactor f2{sub, {"g"}};
  std::vector<Word> assignment = {generator_word(2, 0), generator_word(2, 1)};
  CheckReport r = verify_amalgam(ambient, f1, f2, {"g"}, assignment);
  CHECK_FALSE(r.passed);
  CHECK(r.first_failure() == "cover/h");
}

TEST_CASE("raag_check accepts commutator relators only") {
  Presentation raag;
  raag.generators = Alphabet({"u", "v", "w"});
  raag.add_relator("[u,v]", commutator_word(3, 0, 1));
  raag.add_relator("[v,w]", commutator_word(3, 1, 2));
  CHECK(raag_check(raag));

  Presentation free_pres;
  free_pres.generators = Alphabet({"u", "v"});
  CHECK(raag_check(free_pres));

  Presentation torsion;
  torsion.generators = Alphabet({"u"});
  torsion.add_relator("u^2", parse_relator("u^2", torsion.generators));
  CHECK_FALSE(raag_check(torsion));

  Presentation self_comm;
  self_comm.generators = Alphabet({"u", "v"});
  self_comm.add_relator("[u,u]", reduce(2, std::vector<Letter>{letter(0, 1), letter(0, 1), letter(0, -1), letter(0, -1)}));
  CHECK_FALSE(raag_check(self_comm));
}

TEST_CASE("presentation text format round-trips") {
  std::string text = "gens: a b t;\n# conjugation\nt a t^-1 = a^-1\nb t b^-1 t^-1\n";
  Presentation p = parse_presentation(text);
  CHECK(p.generators.rank() == 3);
  CHECK(p.relators.size() == 2);
  Presentation again = parse_presentation(to_text(p));
  CHECK(again.relators == p.relators);
  CHECK(again.generators.names == p.generators.names);
}

TEST_CASE("presentation parsing error paths") {
  CHECK_THROWS_AS(parse_presentation(""), parse_error);
  CHECK_THROWS_AS(parse_presentation("a b = b a\n"), parse_error);           // missing gens line
  CHECK_THROWS_AS(parse_presentation("gens: a b\na b"), parse_error);        // missing semicolon
  CHECK_THROWS_AS(parse_presentation("gens: a a;\n"), error);                // duplicate name
  CHECK_THROWS_AS(parse_presentation("gens: a b;\nq^2\n"), parse_error);     // unknown generator
}

TEST_CASE("check_relators rejects short assignments and reports json") {
  Presentation p = gl2_presentation();
  std::vector<IntMatrix> short_assignment = {gl2_P()};
  CHECK_THROWS_AS(check_relators(p, short_assignment), mismatch_error);

  CheckReport r = check_relators(p, gl2_assignment());
  std::string j = r.to_json();
  CHECK(j.find("\"relator\"") != std::string::npos);
  CHECK(j.find("\"passed\": true") != std::string::npos);
  CHECK(j.find("\"witness\"") == std::string::npos);

  auto bad = gl2_assignment();
  bad[1] = gl2_Y();
  std::string jb = check_relators(p, bad).to_json();
  CHECK(jb.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(jb.find("\"witness\"") != std::string::npos);
}

TEST_CASE("relator evaluation over words matches direct substitution") {
  Presentation p;
  p.generators = Alphabet({"u", "v"});
  p.add_relator("u v u^-1 v^-1", commutator_word(2, 0, 1));
  // Words from a free group: commutator of a and a is trivial, of a and b is not.
  std::vector<Word> commuting = {parse_word("a", Alphabet::ab()), parse_word("a a", Alphabet::ab())};
  CHECK(check_relators(p, commuting).passed);
  std::vector<Word> free_pair = {parse_word("a", Alphabet::ab()), parse_word("b", Alphabet::ab())};
  CHECK_FALSE(check_relators(p, free_pair).passed);
}
