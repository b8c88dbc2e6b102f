// Named, reproducible suites that machine-check the algebraic facts the
// library is built around, at bounded desk scale: presentation fidelity,
// the D4 normalizer, centralizer classification, mapping-torus rewrites,
// amalgam decompositions, the Formanek-Procesi action and the finite-order
// census.
// Ball-bounded checks are evidence at the configured radius, not proofs;
// each suite carries a built-in negative control that must be caught.

#ifndef HOLKIT_VERIFY_HPP_
#define HOLKIT_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "holkit/autf2.hpp"
#include "holkit/extensions.hpp"
#include "holkit/presentations.hpp"

namespace holkit {

struct SuiteParams {
  int radius = 6;
  int level = 3;                                    // the n of the tower statements
  std::vector<int> k_values = {1, -1, 2, -2, 3, -3};  // exponent set, 0 excluded
  int samples = 20;
  uint64_t seed = 12345;
  size_t cap = 0;  // 0 = default_ball_cap()

  void validate() const;  // radius >= 1, level >= 1, 0 not in k_values
  size_t ball_cap() const { return cap ? cap : default_ball_cap(); }
};

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string witness;  // present on every failure
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::vector<SuiteCheck> checks;  // sorted by name
  bool passed = true;
  long long wall_ms = 0;

  void add(std::string name, bool ok, std::string witness = "");
  void add_report(const std::string& prefix, const CheckReport& r);
  /// Expects the sub-report to fail; records a passing check when it does.
  void add_negative_control(std::string name, const CheckReport& r);
  void finalize();  // sort checks, recompute verdict

  std::string to_text() const;
  /// Sorted-key JSON. wall_ms is excluded from the canonical form so that
  /// reports are byte-identical across runs with equal params and seed.
  std::string to_json(bool include_wall) const;
};

/// Classification of elements commuting with t1 (x1 -> x1^-1, x2 -> x2).
struct CommutantClass {
  enum class Tag { free_part_power, aut_conjugate_form, unclassified };
  Tag tag = Tag::unclassified;
  long long k = 0;   // free_part_power: t2 = x2^k; aut form: conjugation exponent
  int sign_x1 = 0;   // aut form: x1 -> x2^k x1^{sign_x1} x2^-k
  int sign_x2 = 0;   // aut form: x2 -> x2^{sign_x2}
};

/// Words invariant under x1 -> x1^-1: powers of x2 classify, others do not.
CommutantClass classify_commutant_word(const Word& w);
/// Automorphisms of the shape x1 -> x2^k x1^{+-1} x2^-k, x2 -> x2^{+-1}.
CommutantClass classify_commutant_aut(const Automorphism& f);

SuiteReport suite_autf2_presentation(const SuiteParams& params);
SuiteReport suite_normalizer_d4(const SuiteParams& params);
SuiteReport suite_commuting_with_t1(const SuiteParams& params);
SuiteReport suite_mapping_torus(const SuiteParams& params);
SuiteReport suite_general_amalgam(const SuiteParams& params);
SuiteReport suite_appendix_cases(const SuiteParams& params);
SuiteReport suite_fp(const SuiteParams& params);
SuiteReport suite_finite_orders(const SuiteParams& params);

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

}  // namespace holkit

#endif  // HOLKIT_VERIFY_HPP_
