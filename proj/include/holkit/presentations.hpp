// Finitely presented groups as data, checked against concrete realizations.
// A relator passes when it evaluates to the identity of the target group;
// substitution and amalgam verification certify generator rewrites and
// two-factor decompositions on a concrete realization (a necessary-condition
// check, not an isomorphism proof, which would be undecidable in general).

#ifndef HOLKIT_PRESENTATIONS_HPP_
#define HOLKIT_PRESENTATIONS_HPP_

#include <map>
#include <string>
#include <vector>

#include "holkit/group.hpp"
#include "holkit/words.hpp"

namespace holkit {

/// Generators plus relators over them. A relation "u = v" is stored as the
/// relator u v^-1.
struct Presentation {
  Alphabet generators;
  std::vector<Word> relators;
  std::vector<std::string> relator_names;

  Presentation() = default;
  Presentation(Alphabet gens, std::vector<std::pair<std::string, Word>> named_relators);

  int gen_index(const std::string& name) const;
  void add_relator(const std::string& name, const Word& relator);
};

/// Parses the presentation text format:
///   gens: a b t;
///   t a t^-1 = a^-1
///   b t b^-1 t^-1
/// One relator per line; `=` sugar allowed; `#` starts a comment.
Presentation parse_presentation(const std::string& text);
std::string to_text(const Presentation& p);

struct RelatorCheck {
  std::string relator;  // name of the relator checked
  bool passed = false;
  std::string witness;  // evaluated element on failure, empty on pass
};

struct CheckReport {
  std::vector<RelatorCheck> checks;
  bool passed = true;

  void add(std::string name, bool ok, std::string witness = "");
  void merge(const CheckReport& other, const std::string& prefix = "");
  std::string first_failure() const;
  /// {"checks":[{relator, status, witness?}...], "passed": bool}, keys sorted.
  std::string to_json() const;
};

/// Evaluates a word over presentation generators in the target group.
template <GroupElement T>
T evaluate_word(const Word& w, const std::vector<T>& assignment, const T& id) {
  T out = id;
  for (Letter l : w.letters()) {
    const T& g = assignment.at(static_cast<size_t>(letter_gen(l)));
    out = letter_sign(l) > 0 ? group_mul(out, g) : group_mul(out, group_inv(g));
  }
  return out;
}

/// Checks every relator of P under the assignment (one target-group element
/// per generator, in order). Throws mismatch_error if sizes disagree.
template <GroupElement T>
CheckReport check_relators(const Presentation& p, const std::vector<T>& assignment) {
  if (assignment.size() != static_cast<size_t>(p.generators.rank()))
    throw mismatch_error("assignment must cover every generator of the presentation");
  CheckReport report;
  T id = assignment.empty() ? T() : group_id(assignment.front());
  for (size_t i = 0; i < p.relators.size(); ++i) {
    T value = evaluate_word(p.relators[i], assignment, id);
    bool ok = group_eq(value, id);
    report.add(p.relator_names[i], ok, ok ? "" : group_key(value));
  }
  return report;
}

/// Certifies the generator substitution P_old -> P_new on a realization:
/// the induced assignment (new generators evaluated via new_in_old under A)
/// satisfies P_new's relators, and evaluating old_in_new under it recovers A
/// generator-by-generator. Word maps are indexed like the presentations'
/// generator lists; new_in_old[j] is a word over P_old's generators.
template <GroupElement T>
CheckReport verify_substitution(const Presentation& p_old, const Presentation& p_new,
                                const std::vector<Word>& old_in_new, const std::vector<Word>& new_in_old,
                                const std::vector<T>& assignment) {
  if (old_in_new.size() != static_cast<size_t>(p_old.generators.rank()) ||
      new_in_old.size() != static_cast<size_t>(p_new.generators.rank()))
    throw mismatch_error("substitution word maps must cover both generator lists");
  CheckReport report;
  report.merge(check_relators(p_old, assignment), "old/");
  T id = group_id(assignment.front());
  std::vector<T> induced;
  induced.reserve(new_in_old.size());
  for (const Word& w : new_in_old) induced.push_back(evaluate_word(w, assignment, id));
  report.merge(check_relators(p_new, induced), "new/");
  for (int g = 0; g < p_old.generators.rank(); ++g) {
    T back = evaluate_word(old_in_new[static_cast<size_t>(g)], induced, id);
    bool ok = group_eq(back, assignment[static_cast<size_t>(g)]);
    report.add("roundtrip/" + p_old.generators.name(g), ok, ok ? "" : group_key(back));
  }
  return report;
}

/// One side of an amalgamated decomposition: the factor's presentation and,
/// for each factor generator, the name of the ambient generator it realizes.
struct AmalgamFactor {
  Presentation presentation;
  std::vector<std::string> ambient_names;  // one per factor generator
};

/// Certifies G = F1 *_edge F2 on a realization: both factor presentations
/// hold under the restricted assignments, the edge generators appear in both
/// factors with equal values, and every ambient generator is covered by some
/// factor.
template <GroupElement T>
CheckReport verify_amalgam(const Presentation& ambient, const AmalgamFactor& factor1, const AmalgamFactor& factor2,
                           const std::vector<std::string>& edge, const std::vector<T>& assignment) {
  CheckReport report;
  report.merge(check_relators(ambient, assignment), "ambient/");
  T id = group_id(assignment.front());

  auto restrict_assignment = [&](const AmalgamFactor& f) {
    std::vector<T> sub;
    sub.reserve(f.ambient_names.size());
    for (const auto& name : f.ambient_names)
      sub.push_back(assignment[static_cast<size_t>(ambient.gen_index(name))]);
    return sub;
  };
  std::vector<T> a1 = restrict_assignment(factor1);
  std::vector<T> a2 = restrict_assignment(factor2);
  report.merge(check_relators(factor1.presentation, a1), "factor1/");
  report.merge(check_relators(factor2.presentation, a2), "factor2/");

  auto find_in = [](const std::vector<std::string>& names, const std::string& name) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  };
  for (const auto& name : edge) {
    int i1 = find_in(factor1.ambient_names, name);
    int i2 = find_in(factor2.ambient_names, name);
    bool present = i1 >= 0 && i2 >= 0;
    report.add("edge/" + name + "/in-both-factors", present);
    if (present) {
      bool equal = group_eq(a1[static_cast<size_t>(i1)], a2[static_cast<size_t>(i2)]);
      report.add("edge/" + name + "/values-agree", equal, equal ? "" : group_key(a1[static_cast<size_t>(i1)]));
    }
  }
  for (int g = 0; g < ambient.generators.rank(); ++g) {
    const std::string& name = ambient.generators.name(g);
    bool covered = find_in(factor1.ambient_names, name) >= 0 || find_in(factor2.ambient_names, name) >= 0;
    report.add("cover/" + name, covered);
  }
  (void)id;
  return report;
}

/// True iff every relator is a commutator [g, h] of two distinct generators
/// (in any of the sign variants g^s h^t g^-s h^-t).
bool raag_check(const Presentation& p);

/// Commutator word g h g^-1 h^-1 over the given rank.
Word commutator_word(int rank, int g, int h);

}  // namespace holkit

#endif  // HOLKIT_PRESENTATIONS_HPP_
