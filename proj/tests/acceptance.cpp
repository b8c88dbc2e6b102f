// Acceptance suite. Each criterion prints exactly one PASS/FAIL line with
// its wall time; the process exits 0 iff every criterion passes. Checks are
// exact (no tolerances); the stated time budgets are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "holkit/autf2.hpp"
#include "holkit/expr.hpp"
#include "holkit/verify.hpp"
#include "test_support.hpp"

using namespace holkit;
using namespace holkit::testing;

namespace {

struct Criterion {
  int id;
  std::string label;
  double limit_seconds;
  std::function<bool(std::string&)> run;
};

bool run_suite_criterion(const std::string& name, const SuiteParams& params, std::string& detail) {
  SuiteReport r = run_suite(name, params);
  if (!r.passed) {
    for (const auto& c : r.checks)
      if (!c.passed) {
        detail = name + " check '" + c.name + "'" + (c.witness.empty() ? "" : " witness: " + c.witness);
        break;
      }
  }
  return r.passed;
}

// 1. Aut(F2) and GL2(Z) presentations pass; every single-relator mutation is
//    caught with a witness.
bool criterion_presentations(std::string& detail) {
  SuiteParams p;
  return run_suite_criterion("suite_autf2_presentation", p, detail);
}

// 2. Normal form: 10^3 random words of length <= 12 round-trip, respellings
//    collapse to identical normal forms, projection kernel = Inn.
bool criterion_normal_form(std::string& detail) {
  auto rng = make_rng(20240801);
  const AutF2Basis& b = AutF2Basis::get();
  auto gens = autf2_assignment();
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<int> pick(0, 4);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::uniform_int_distribution<int> relator_pick(0, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = len(rng);
    std::vector<std::pair<int, int>> spelling;
    Automorphism f = Automorphism::identity(2);
    for (int i = 0; i < n; ++i) {
      int g = pick(rng), s = sgn(rng) ? 1 : -1;
      spelling.emplace_back(g, s);
      f = compose(f, s > 0 ? gens[static_cast<size_t>(g)] : invert(gens[static_cast<size_t>(g)]));
    }
    NormalForm nf = normal_form(f);
    if (!(evaluate(nf) == f)) {
      detail = "round-trip failed at trial " + std::to_string(trial);
      return false;
    }
    // Re-spell with a relator inserted at a random position.
    Automorphism g2 = Automorphism::identity(2);
    size_t insert_at = spelling.empty() ? 0 : std::uniform_int_distribution<size_t>(0, spelling.size())(rng);
    Automorphism relator;
    switch (relator_pick(rng)) {
      case 0: relator = power(b.p, 2); break;
      case 1: relator = power(b.x, 4); break;
      case 2: relator = compose(power(compose(b.p, b.x), 2), Automorphism::identity(2)); break;
      default: {
        // x^2 (y^3 tb^-1 ta)^-1 is trivial by the exchange relation.
        Automorphism rhs = compose(compose(power(b.y, 3), invert(b.tb)), b.ta);
        relator = compose(power(b.x, 2), invert(rhs));
        break;
      }
    }
    for (size_t i = 0; i <= spelling.size(); ++i) {
      if (i == insert_at) g2 = compose(g2, relator);
      if (i < spelling.size()) {
        auto [g, s] = spelling[i];
        g2 = compose(g2, s > 0 ? gens[static_cast<size_t>(g)] : invert(gens[static_cast<size_t>(g)]));
      }
    }
    if (!(g2 == f) || !(normal_form(g2) == nf)) {
      detail = "respelling changed the normal form at trial " + std::to_string(trial);
      return false;
    }
    bool kernel = project_gl2(f).mat.is_identity();
    bool trivial_prefix = nf.r == 0 && nf.u.is_identity() && nf.s == 0;
    if (kernel != trivial_prefix) {
      detail = "projection kernel mismatch at trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

// 3. Radius-6 ball: no element outside D4 normalizes D4.
bool criterion_normalizer(std::string& detail) {
  SuiteParams p;
  p.radius = 6;
  return run_suite_criterion("suite_normalizer_d4", p, detail);
}

// 4. Words of length <= 10 invariant under the flip are powers of x2; ball
//    centralizer elements match the four forms with |k| <= 3.
bool criterion_commutant(std::string& detail) {
  SuiteParams p;
  p.radius = 10;
  p.k_values = {1, -1, 2, -2, 3, -3};
  return run_suite_criterion("suite_commuting_with_t1", p, detail);
}

// 5. Mapping-torus, general-amalgam and appendix-case pipelines.
bool criterion_rewrites(std::string& detail) {
  SuiteParams p;
  p.level = 5;
  p.samples = 20;
  p.k_values = {1, -1, 2, -2, 3, -3};
  if (!run_suite_criterion("suite_mapping_torus", p, detail)) return false;
  if (!run_suite_criterion("suite_appendix_cases", p, detail)) return false;
  for (int n = 3; n <= 5; ++n) {
    SuiteParams q = p;
    q.level = n;
    if (!run_suite_criterion("suite_general_amalgam", q, detail)) return false;
  }
  return true;
}

// 6. Formanek-Procesi: relators, Z x Z witness, 100 random actions.
bool criterion_fp(std::string& detail) {
  SuiteParams p;
  p.samples = 100;
  return run_suite_criterion("suite_fp", p, detail);
}

// 7. Finite-order census over the radius-6 ball plus explicit witnesses.
bool criterion_finite_orders(std::string& detail) {
  SuiteParams p;
  p.radius = 6;
  return run_suite_criterion("suite_finite_orders", p, detail);
}

// 8. Infrastructure: 10^4-case property suites and byte-identical reports.
bool criterion_infrastructure(std::string& detail) {
  auto rng = make_rng(777000);
  for (int trial = 0; trial < 10000; ++trial) {
    auto raw = random_raw_letters(rng, 2, 60);
    Word fast = reduce(2, raw);
    auto slow = reduce_oracle(rng, raw);
    if (fast.letters().size() != slow.size() ||
        !std::equal(slow.begin(), slow.end(), fast.letters().begin())) {
      detail = "reduce disagrees with the random-order oracle at trial " + std::to_string(trial);
      return false;
    }
    Word u = random_reduced(rng, 2, 10);
    Word v = random_reduced(rng, 2, 10);
    Word w = random_reduced(rng, 2, 10);
    if (!(multiply(multiply(u, v), w) == multiply(u, multiply(v, w))) ||
        !multiply(u, invert(u)).is_identity() || !(multiply(u, Word(2)) == u)) {
      detail = "group law failure at trial " + std::to_string(trial);
      return false;
    }
  }
  std::vector<Word> images = {random_reduced(rng, 2, 5), random_reduced(rng, 2, 5)};
  for (int trial = 0; trial < 10000; ++trial) {
    Word u = random_reduced(rng, 2, 12);
    Word v = random_reduced(rng, 2, 12);
    if (!(substitute(multiply(u, v), images) == multiply(substitute(u, images), substitute(v, images)))) {
      detail = "substitute homomorphism failure at trial " + std::to_string(trial);
      return false;
    }
  }
  for (int trial = 0; trial < 10000; ++trial) {
    Word c = random_reduced(rng, 2, 20);
    std::vector<std::pair<int, Word>> pairs = {{0, conjugate(c, generator_word(2, 0))},
                                               {1, conjugate(c, generator_word(2, 1))}};
    auto got = extract_conjugator(2, pairs);
    if (!got || !(*got == c)) {
      detail = "conjugator extraction failure at trial " + std::to_string(trial);
      return false;
    }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    Automorphism f = random_basis_product(rng, 5);
    Automorphism g = random_basis_product(rng, 5);
    if (!(abelianize(compose(f, g)) == abelianize(f) * abelianize(g))) {
      detail = "abelianize functoriality failure at trial " + std::to_string(trial);
      return false;
    }
  }
  // Reports are byte-identical under a fixed seed (wall time excluded).
  SuiteParams p;
  p.level = 3;
  p.samples = 5;
  for (const char* name : {"suite_mapping_torus", "suite_fp", "suite_finite_orders"}) {
    SuiteReport a = run_suite(name, p);
    SuiteReport b = run_suite(name, p);
    if (a.to_json(false) != b.to_json(false)) {
      detail = std::string(name) + " report not reproducible";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "presentation-fidelity", 1.0, criterion_presentations},
      {2, "normal-form-soundness-uniqueness", 30.0, criterion_normal_form},
      {3, "normalizer-evidence-radius-6", 300.0, criterion_normalizer},
      {4, "commutant-classification", 300.0, criterion_commutant},
      {5, "rewrite-pipeline", 120.0, criterion_rewrites},
      {6, "formanek-procesi", 30.0, criterion_fp},
      {7, "finite-order-census", 300.0, criterion_finite_orders},
      {8, "infrastructure-properties", 300.0, criterion_infrastructure},
  };
  bool all = true;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("exceeded time budget of ") +
                std::to_string(c.limit_seconds) + " s";
    }
    std::printf("%s  %d  %s  (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.label.c_str(), secs,
                detail.empty() ? "" : "  -- ", detail.c_str());
    all = all && ok;
  }
  return all ? 0 : 1;
}
