#include "holkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "holkit/expr.hpp"
#include "json.hpp"

namespace holkit {

void SuiteParams::validate() const {
  if (radius < 1) throw error("suite radius must be >= 1");
  if (level < 1) throw error("suite level must be >= 1");
  if (k_values.empty()) throw error("suite exponent set must be non-empty");
  for (int k : k_values)
    if (k == 0) throw error("suite exponent set must not contain 0");
}

void SuiteReport::add(std::string name, bool ok, std::string witness) {
  checks.push_back({std::move(name), ok, std::move(witness)});
  passed = passed && ok;
}

void SuiteReport::add_report(const std::string& prefix, const CheckReport& r) {
  for (const auto& c : r.checks) add(prefix + c.relator, c.passed, c.witness);
}

void SuiteReport::add_negative_control(std::string name, const CheckReport& r) {
  bool caught = !r.passed;
  std::string witness;
  if (!caught) witness = "mutation escaped: every check passed";
  add("negative-control/" + std::move(name), caught, std::move(witness));
}

void SuiteReport::finalize() {
  std::stable_sort(checks.begin(), checks.end(), [](const SuiteCheck& a, const SuiteCheck& b) { return a.name < b.name; });
  passed = true;
  for (const auto& c : checks) passed = passed && c.passed;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << (passed ? "  PASS" : "  FAIL") << "  (" << checks.size() << " checks, " << wall_ms
      << " ms)\n";
  for (const auto& c : checks) {
    out << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name;
    if (!c.witness.empty()) out << "  [witness: " << c.witness << "]";
    out << "\n";
  }
  return out.str();
}

std::string SuiteReport::to_json(bool include_wall) const {
  nlohmann::json j;
  j["suite"] = suite;
  nlohmann::json p;
  p["radius"] = params.radius;
  p["n"] = params.level;
  p["k"] = params.k_values;
  p["samples"] = params.samples;
  p["seed"] = params.seed;
  p["cap"] = params.ball_cap();
  j["params"] = p;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = c.passed ? "pass" : "fail";
    if (!c.witness.empty()) e["witness"] = c.witness;
    cs.push_back(e);
  }
  j["checks"] = cs;
  j["passed"] = passed;
  if (include_wall) j["wall_ms"] = wall_ms;
  return j.dump(2) + "\n";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  long long ms() const { return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count(); }
};

Word random_reduced_word(std::mt19937_64& rng, int rank, int max_len, bool allow_empty = true) {
  std::uniform_int_distribution<int> len_dist(allow_empty ? 0 : 1, max_len);
  int len = len_dist(rng);
  WordBuilder b(rank);
  Letter prev = 0;
  std::uniform_int_distribution<int> gen_dist(0, rank - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  for (int i = 0; i < len; ++i) {
    Letter l;
    do {
      l = letter(gen_dist(rng), sign_dist(rng) ? +1 : -1);
    } while (l == -prev);
    b.push(l);
    prev = l;
  }
  return b.take();
}

Automorphism random_basis_aut(std::mt19937_64& rng, int len) {
  auto gens = autf2_assignment();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  Automorphism acc = Automorphism::identity(2);
  for (int i = 0; i < len; ++i) {
    const Automorphism& g = gens[static_cast<size_t>(pick(rng))];
    acc = compose(acc, sign(rng) ? g : invert(g));
  }
  return acc;
}

TowerElement random_tower(std::mt19937_64& rng, int level, int max_len) {
  if (level == 1)
    return TowerElement::base(HolElement(random_reduced_word(rng, 2, max_len), random_basis_aut(rng, max_len)));
  return TowerElement::make(random_reduced_word(rng, level + 1, max_len), random_tower(rng, level - 1, max_len));
}

/// Lifts an Aut(F_2) element to the pure-automorphism copy at the given
/// level (acts on x1, x2, fixes everything above).
TowerElement aut_at_level(const Automorphism& a, int level) {
  TowerElement t = TowerElement::base(HolElement::from_aut(a));
  for (int l = 1; l < level; ++l) t = section(t);
  return t;
}

/// The element x2^k of the base free group carried up the tower so that its
/// conjugation action reaches every letter above it: at each level the free
/// part stays x2^k, so the action fixes x1, x2 and conjugates x_i (i >= 3)
/// by x2^-k... with the stored part x2^-k the action conjugates by x2^k.
TowerElement diagonal_x2_power(long long k, int level) {
  Word w = power(generator_word(2, 1), -k);
  TowerElement t = TowerElement::base(HolElement::from_word(w));
  for (int l = 1; l < level; ++l) t = tower_include(t);
  return t;
}

std::string xname(int i) { return "x" + std::to_string(i); }

Alphabet x_alphabet(int count) { return Alphabet::numbered(count); }

/// Spells a word over the x1..x_{count} sub-alphabet of a presentation;
/// letters must fit, the source rank may differ.
std::string spell(const Word& w, int count) {
  WordBuilder b(count);
  for (Letter l : w.letters()) b.push(l);
  return to_string(b.take(), x_alphabet(count));
}

Presentation make_presentation(std::vector<std::string> gen_names, const std::vector<std::string>& relator_texts) {
  Presentation p;
  p.generators = Alphabet(std::move(gen_names));
  for (const auto& text : relator_texts) p.add_relator(text, parse_relator(text, p.generators));
  return p;
}

/// Word map for verify_substitution given per-generator expression texts.
std::vector<Word> word_map(const Presentation& target_alphabet_of, const Alphabet& over,
                           const std::map<std::string, std::string>& exceptions) {
  std::vector<Word> out;
  for (const auto& name : target_alphabet_of.generators.names) {
    auto it = exceptions.find(name);
    out.push_back(parse_word(it != exceptions.end() ? it->second : name, over));
  }
  return out;
}

const Alphabet kAB = Alphabet::ab();

}  // namespace

CommutantClass classify_commutant_word(const Word& w) {
  CommutantClass c;
  for (Letter l : w.letters())
    if (letter_gen(l) == 0) return c;  // x1 appears: unclassified
  c.tag = CommutantClass::Tag::free_part_power;
  c.k = exponent_sum(w, 1);
  return c;
}

CommutantClass classify_commutant_aut(const Automorphism& f) {
  CommutantClass c;
  if (f.rank() != 2) return c;
  // x2 -> x2^{+-1}
  const Word& w2 = f.image(1);
  if (w2.length() != 1 || letter_gen(w2.letter_at(0)) != 1) return c;
  int sign2 = letter_sign(w2.letter_at(0));
  // x1 -> x2^k x1^{+-1} x2^-k
  const Word& w1 = f.image(0);
  if (w1.length() % 2 == 0) return c;
  size_t mid = w1.length() / 2;
  if (letter_gen(w1.letter_at(mid)) != 0) return c;
  long long k = 0;
  for (size_t i = 0; i < mid; ++i) {
    Letter l = w1.letter_at(i);
    if (letter_gen(l) != 1 || l != w1.letter_at(0)) return c;  // uniform x2 run
    if (w1.letter_at(w1.length() - 1 - i) != -l) return c;
  }
  if (mid > 0) k = static_cast<long long>(mid) * letter_sign(w1.letter_at(0));
  c.tag = CommutantClass::Tag::aut_conjugate_form;
  c.k = k;
  c.sign_x1 = letter_sign(w1.letter_at(mid));
  c.sign_x2 = sign2;
  return c;
}

// ---------------------------------------------------------------------------
// suite_autf2_presentation

SuiteReport suite_autf2_presentation(const SuiteParams& params) {
  params.validate();
  Timer timer;
  SuiteReport report;
  report.suite = "suite_autf2_presentation";
  report.params = params;

  Presentation aut_pres = autf2_presentation();
  auto basis = autf2_assignment();
  report.add_report("autf2/", check_relators(aut_pres, basis));

  Presentation gl2_pres = gl2_presentation();
  auto mats = gl2_assignment();
  report.add_report("gl2/", check_relators(gl2_pres, mats));

  // The projection respects generators: abelianized basis equals P, X, Y and
  // the inner generators die.
  const AutF2Basis& b = AutF2Basis::get();
  report.add("projection/p->P", abelianize(b.p) == gl2_P(), abelianize(b.p).str());
  report.add("projection/x->X", abelianize(b.x) == gl2_X(), abelianize(b.x).str());
  report.add("projection/y->Y", abelianize(b.y) == gl2_Y(), abelianize(b.y).str());
  report.add("projection/ta->1", abelianize(b.ta).is_identity(), abelianize(b.ta).str());
  report.add("projection/tb->1", abelianize(b.tb).is_identity(), abelianize(b.tb).str());

  // Mutating every single relator must be caught with a witness.
  for (size_t i = 0; i < aut_pres.relators.size(); ++i) {
    Presentation mutated = aut_pres;
    int g = letter_gen(mutated.relators[i].letter_at(0));
    mutated.relators[i] = multiply(mutated.relators[i], generator_word(mutated.generators.rank(), g));
    CheckReport r = check_relators(mutated, basis);
    bool caught = !r.passed;
    for (const auto& c : r.checks)
      if (!c.passed && c.witness.empty()) caught = false;
    report.add("negative-control/autf2-mutated/" + aut_pres.relator_names[i], caught);
  }
  for (size_t i = 0; i < gl2_pres.relators.size(); ++i) {
    Presentation mutated = gl2_pres;
    int g = letter_gen(mutated.relators[i].letter_at(0));
    mutated.relators[i] = multiply(mutated.relators[i], generator_word(mutated.generators.rank(), g));
    report.add_negative_control("gl2-mutated/" + gl2_pres.relator_names[i], check_relators(mutated, mats));
  }

  // Perturbed basis: swapping x with its inverse breaks specific relators.
  auto perturbed = basis;
  perturbed[1] = invert(perturbed[1]);
  report.add_negative_control("perturbed-basis-x-inverted", check_relators(aut_pres, perturbed));

  report.wall_ms = timer.ms();
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// suite_normalizer_d4

SuiteReport suite_normalizer_d4(const SuiteParams& params) {
  params.validate();
  Timer timer;
  SuiteReport report;
  report.suite = "suite_normalizer_d4";
  report.params = params;

  const AutF2Basis& b = AutF2Basis::get();
  std::vector<Automorphism> d4_gens = {b.p, b.x};
  std::vector<Automorphism> d4 = enumerate_ball(d4_gens, 8, params.ball_cap());
  report.add("d4/order=" + std::to_string(d4.size()), d4.size() == 8, std::to_string(d4.size()));

  std::unordered_set<std::string> d4_keys;
  for (const auto& e : d4) d4_keys.insert(group_key(e));

  // p x p^-1 = x^-1 lands back in D4.
  Automorphism pxp = compose(compose(b.p, b.x), invert(b.p));
  report.add("d4/pxp^-1=x^-1", pxp == invert(b.x));

  std::vector<Automorphism> ball = enumerate_ball(autf2_assignment(), params.radius, params.ball_cap());
  report.add("ball/size=" + std::to_string(ball.size()), true);
  report.add("scope/evidence-at-radius-" + std::to_string(params.radius), true,
             "ball-bounded evidence, not a proof");

  auto normalizes = [&](const Automorphism& g) {
    Automorphism gi = invert(g);
    return d4_keys.count(group_key(compose(compose(g, b.p), gi))) > 0 &&
           d4_keys.count(group_key(compose(compose(g, b.x), gi))) > 0;
  };

  size_t normalizer_count = 0;
  size_t violations = 0;
  std::string first_violation;
  for (const auto& g : ball) {
    if (!normalizes(g)) continue;
    ++normalizer_count;
    if (!d4_keys.count(group_key(g))) {
      ++violations;
      if (first_violation.empty()) first_violation = to_string(g, kAB);
    }
  }
  report.add("normalizer/elements-in-ball=" + std::to_string(normalizer_count), true);
  report.add("normalizer/violations=0", violations == 0,
             violations ? first_violation + " normalizes D4 but lies outside" : "");

  // tb conjugates x out of D4, so it must not count as a normalizer.
  report.add("negative-control/tb-not-a-normalizer", !normalizes(b.tb));

  report.wall_ms = timer.ms();
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// suite_commuting_with_t1

namespace {

// Enumerates all reduced rank-2 words of length <= max_len, calling fn.
template <class Fn>
void for_each_reduced_word(int max_len, Fn&& fn) {
  std::vector<Letter> stack;
  Word epsilon(2);
  fn(epsilon);
  const Letter letters[4] = {letter(0, 1), letter(0, -1), letter(1, 1), letter(1, -1)};
  // Depth-first over the 4-regular tree of reduced words.
  struct Frame {
    int next = 0;
  };
  std::vector<Frame> frames(1);
  WordBuilder builder(2);
  std::vector<Letter> current;
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.next >= 4 || static_cast<int>(current.size()) >= max_len) {
      frames.pop_back();
      if (!current.empty()) current.pop_back();
      continue;
    }
    Letter l = letters[f.next++];
    if (!current.empty() && current.back() == -l) continue;
    current.push_back(l);
    Word w = reduce(2, current);
    fn(w);
    frames.emplace_back();
  }
}

}  // namespace

SuiteReport suite_commuting_with_t1(const SuiteParams& params) {
  params.validate();
  Timer timer;
  SuiteReport report;
  report.suite = "suite_commuting_with_t1";
  report.params = params;

  const AutF2Basis& basis = AutF2Basis::get();
  const Automorphism& t1 = basis.t1;
  report.add("t1/images", t1.image(0) == invert(generator_word(2, 0)) && t1.image(1) == generator_word(2, 1));

  // Part (i): words fixed by x1 -> x1^-1, x2 -> x2 are exactly the powers
  // of x2; at length <= radius that is 2*radius+1 words.
  std::vector<Word> flip = {invert(generator_word(2, 0)), generator_word(2, 1)};
  size_t invariant_count = 0;
  size_t bad = 0;
  std::string bad_witness;
  for_each_reduced_word(params.radius, [&](const Word& w) {
    if (substitute(w, flip) != w) return;
    ++invariant_count;
    if (classify_commutant_word(w).tag != CommutantClass::Tag::free_part_power) {
      ++bad;
      if (bad_witness.empty()) bad_witness = to_string(w, kAB);
    }
  });
  report.add("words/invariant-count=" + std::to_string(invariant_count),
             invariant_count == static_cast<size_t>(2 * params.radius + 1));
  report.add("words/all-invariant-are-x2-powers", bad == 0, bad_witness);
  report.add("negative-control/x1-not-invariant", substitute(generator_word(2, 0), flip) != generator_word(2, 0));

  // Part (ii): the Aut(F_2) ball of radius max|k|. The k-range assertion
  // below checks exhaustively that no centralizer element in this ball
  // needs a larger exponent (tb^{R+1} takes R+1 letters, so radius R+1
  // would already contain k = R+1).
  long long max_k = 0;
  for (int k : params.k_values) max_k = std::max(max_k, static_cast<long long>(k < 0 ? -k : k));
  int ball_radius = static_cast<int>(max_k);
  std::vector<Automorphism> ball = enumerate_ball(autf2_assignment(), ball_radius, params.ball_cap());
  report.add("ball/radius=" + std::to_string(ball_radius) + "/size=" + std::to_string(ball.size()), true);

  size_t commuting = 0, finite_order = 0, classified = 0, unclassified = 0;
  std::string unclassified_witness;
  long long seen_max_k = 0;
  for (const auto& f : ball) {
    if (compose(f, t1) != compose(t1, f)) continue;
    ++commuting;
    if (gl2_has_finite_order(abelianize(f)) && order_of(f, 12).finite) {
      ++finite_order;  // finite centralizer elements are reported, not judged
      continue;
    }
    CommutantClass c = classify_commutant_aut(f);
    if (c.tag == CommutantClass::Tag::aut_conjugate_form && c.k != 0) {
      ++classified;
      seen_max_k = std::max(seen_max_k, c.k < 0 ? -c.k : c.k);
    } else {
      ++unclassified;
      if (unclassified_witness.empty()) unclassified_witness = to_string(f, kAB);
    }
  }
  report.add("centralizer/size=" + std::to_string(commuting), true);
  report.add("centralizer/finite-order=" + std::to_string(finite_order), true);
  report.add("centralizer/infinite-classified=" + std::to_string(classified), true);
  report.add("centralizer/no-unclassified", unclassified == 0, unclassified_witness);
  report.add("centralizer/k-range<=" + std::to_string(max_k), seen_max_k <= max_k, std::to_string(seen_max_k));

  // All four sign cases occur for each tested k:
  // tb^k * (t1 or id) * (x^2 or id) realizes (k, -+, -+).
  for (int k : params.k_values) {
    for (int e1 : {+1, -1})
      for (int e2 : {+1, -1}) {
        Automorphism cand = power(basis.tb, k);
        if (e2 < 0) cand = compose(cand, power(basis.x, 2));  // x^2 inverts both
        if (e1 * e2 < 0) cand = compose(cand, t1);
        CommutantClass c = classify_commutant_aut(cand);
        bool ok = c.tag == CommutantClass::Tag::aut_conjugate_form && c.sign_x1 == e1 && c.sign_x2 == e2 &&
                  compose(cand, t1) == compose(t1, cand);
        report.add("cases/k=" + std::to_string(k) + "/e1=" + std::to_string(e1) + "/e2=" + std::to_string(e2), ok,
                   ok ? "" : to_string(cand, kAB));
      }
  }

  report.add("negative-control/ta-not-in-centralizer", compose(basis.ta, t1) != compose(t1, basis.ta));

  report.wall_ms = timer.ms();
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// suite_mapping_torus

namespace {

// One mapping-torus pipeline at tower level n >= 2 for a drawn (g1, lower):
// realize G_n = <t, x1..x_{n+1}>, check the presentation, the alpha = g1^-1 t
// substitution, the H *_Z Z^2 amalgam and the beta = g1 alpha substitution.
void mapping_torus_pipeline(SuiteReport& report, const std::string& tag, int n, const Word& g1,
                            const TowerElement& lower_of_t) {
  // t acts as: x_i -> (lower action)(x_i) for i <= n, x_{n+1} -> g1 x_{n+1} g1^-1.
  TowerElement t = section(lower_of_t);
  Automorphism act = tower_action(lower_of_t);

  std::vector<std::string> gen_names = {"t"};
  for (int i = 1; i <= n + 1; ++i) gen_names.push_back(xname(i));

  std::vector<std::string> relators;
  for (int i = 1; i <= n; ++i)
    relators.push_back("t " + xname(i) + " t^-1 = " + spell(act.image(i - 1), n + 1));
  relators.push_back("t " + xname(n + 1) + " t^-1 = " + spell(conjugate(g1.promoted(n + 1), generator_word(n + 1, n)), n + 1));
  Presentation p_orig = make_presentation(gen_names, relators);

  std::vector<TowerElement> assignment = {t};
  for (int i = 0; i <= n; ++i) assignment.push_back(TowerElement::from_word(generator_word(n + 1, i)));
  report.add_report(tag + "presentation/", check_relators(p_orig, assignment));

  // alpha = g1^-1 t: the conjugation relators pick up g1 and x_{n+1} now
  // commutes with alpha.
  std::vector<std::string> alpha_names = {"alpha"};
  for (int i = 1; i <= n + 1; ++i) alpha_names.push_back(xname(i));
  std::vector<std::string> alpha_relators;
  Word g1_big = g1.promoted(n + 1);
  for (int i = 1; i <= n; ++i) {
    Word rhs = multiply(multiply(invert(g1_big), act.image(i - 1)), g1_big);
    alpha_relators.push_back("alpha " + xname(i) + " alpha^-1 = " + spell(rhs, n + 1));
  }
  alpha_relators.push_back("alpha " + xname(n + 1) + " alpha^-1 = " + xname(n + 1));
  Presentation p_alpha = make_presentation(alpha_names, alpha_relators);

  std::string g1_text = spell(g1, n + 1);
  std::vector<Word> old_in_new = word_map(p_orig, p_alpha.generators, {{"t", "(" + g1_text + ") alpha"}});
  std::vector<Word> new_in_old = word_map(p_alpha, p_orig.generators, {{"alpha", "(" + g1_text + ")^-1 t"}});
  report.add_report(tag + "alpha-substitution/", verify_substitution(p_orig, p_alpha, old_in_new, new_in_old, assignment));

  // Amalgam G_n = H *_<alpha> Z^2 over the alpha presentation.
  TowerElement alpha_elt = tower_multiply(TowerElement::from_word(invert(g1_big)), t);
  std::vector<TowerElement> alpha_assignment = {alpha_elt};
  for (int i = 0; i <= n; ++i) alpha_assignment.push_back(TowerElement::from_word(generator_word(n + 1, i)));

  AmalgamFactor h_factor;
  {
    std::vector<std::string> names = {"alpha"};
    for (int i = 1; i <= n; ++i) names.push_back(xname(i));
    std::vector<std::string> rels(alpha_relators.begin(), alpha_relators.end() - 1);
    h_factor.presentation = make_presentation(names, rels);
    h_factor.ambient_names = names;
  }
  AmalgamFactor z2_factor;
  {
    std::vector<std::string> names = {"alpha", xname(n + 1)};
    z2_factor.presentation =
        make_presentation(names, {"alpha " + xname(n + 1) + " alpha^-1 " + xname(n + 1) + "^-1"});
    z2_factor.ambient_names = names;
  }
  report.add_report(tag + "amalgam/", verify_amalgam(p_alpha, h_factor, z2_factor, {"alpha"}, alpha_assignment));

  // beta = g1 alpha turns H back into the lower-level mapping torus.
  std::vector<std::string> beta_names = {"beta"};
  for (int i = 1; i <= n; ++i) beta_names.push_back(xname(i));
  std::vector<std::string> beta_relators;
  for (int i = 1; i <= n; ++i)
    beta_relators.push_back("beta " + xname(i) + " beta^-1 = " + spell(act.image(i - 1), n));
  Presentation p_beta = make_presentation(beta_names, beta_relators);

  std::vector<TowerElement> h_assignment = {alpha_elt};
  for (int i = 0; i < n; ++i) h_assignment.push_back(TowerElement::from_word(generator_word(n + 1, i)));
  std::string g1_text_n = spell(g1, n);
  std::vector<Word> h_in_beta = word_map(h_factor.presentation, p_beta.generators, {{"alpha", "(" + g1_text_n + ")^-1 beta"}});
  std::vector<Word> beta_in_h = word_map(p_beta, h_factor.presentation.generators, {{"beta", "(" + g1_text_n + ") alpha"}});
  report.add_report(tag + "beta-substitution/",
                    verify_substitution(h_factor.presentation, p_beta, h_in_beta, beta_in_h, h_assignment));
}

}  // namespace

SuiteReport suite_mapping_torus(const SuiteParams& params) {
  params.validate();
  Timer timer;
  SuiteReport report;
  report.suite = "suite_mapping_torus";
  report.params = params;

  std::mt19937_64 rng(params.seed);

  // n = 1: G_1 = F_2 x| <g> for any g in Hol(F_2); presentation check only.
  {
    size_t failures = 0;
    std::string witness;
    for (int s = 0; s < params.samples; ++s) {
      HolElement g(random_reduced_word(rng, 2, 6), random_basis_aut(rng, 4));
      std::vector<std::string> relators;
      for (int i = 1; i <= 2; ++i) {
        Word rhs = conjugate(g.free_part, g.aut_part.image(i - 1));
        relators.push_back("t " + xname(i) + " t^-1 = " + spell(rhs, 2));
      }
      Presentation p = make_presentation({"t", "x1", "x2"}, relators);
      std::vector<HolElement> a = {g, HolElement::from_word(generator_word(2, 0)),
                                   HolElement::from_word(generator_word(2, 1))};
      CheckReport r = check_relators(p, a);
      if (!r.passed) {
        ++failures;
        if (witness.empty()) witness = "sample " + std::to_string(s) + ": " + r.first_failure();
      }
    }
    report.add("n=1/presentation(" + std::to_string(params.samples) + " samples)", failures == 0, witness);
  }

  for (int n = 2; n <= params.level; ++n) {
    size_t failures = 0;
    std::string witness;
    for (int s = 0; s < params.samples; ++s) {
      Word g1 = random_reduced_word(rng, n, 6);
      TowerElement lower = n == 2 ? TowerElement::base(HolElement(invert(g1), random_basis_aut(rng, 4)))
                                  : TowerElement::make(invert(g1), random_tower(rng, n - 2, 4));
      SuiteReport sub;
      sub.suite = report.suite;
      mapping_torus_pipeline(sub, "", n, g1, lower);
      if (!sub.passed) {
        ++failures;
        if (witness.empty())
          for (const auto& c : sub.checks)
            if (!c.passed) {
              witness = "sample " + std::to_string(s) + ": " + c.name;
              break;
            }
      }
    }
    report.add("n=" + std::to_string(n) + "/pipeline(" + std::to_string(params.samples) + " samples)", failures == 0,
               witness);
  }

  // g2 = id, g1 = e: alpha = t and the substitution is trivial.
  {
    SuiteReport sub;
    sub.suite = report.suite;
    mapping_torus_pipeline(sub, "trivial-g/", 2, Word(2), TowerElement::identity(1));
    sub.finalize();
    report.add("trivial-g/alpha=t", sub.passed, sub.passed ? "" : sub.checks.front().name);
  }

  // Pinned configurations: n = 2 with g1 = x1 x2, and n = 3 with
  // g1 = x1 x2^2 and the p-swap acting below.
  {
    const AutF2Basis& basis = AutF2Basis::get();
    Word g1 = parse_word("x1 x2", x_alphabet(2));
    SuiteReport sub;
    sub.suite = report.suite;
    mapping_torus_pipeline(sub, "", 2, g1, TowerElement::base(HolElement(invert(g1), basis.p)));
    sub.finalize();
    report.add("pinned/n=2-g1=x1x2", sub.passed, sub.passed ? "" : sub.checks.front().name);

    Word g1b = parse_word("x1 x2^2", x_alphabet(3));
    SuiteReport sub3;
    sub3.suite = report.suite;
    mapping_torus_pipeline(sub3, "", 3, g1b,
                           TowerElement::make(invert(g1b), TowerElement::base(HolElement::from_aut(basis.p))));
    sub3.finalize();
    report.add("pinned/n=3-g1=x1x2^2-g2=p", sub3.passed, sub3.passed ? "" : sub3.checks.front().name);
  }

  // Negative control: claiming t x_{n+1} t^-1 = x_{n+1} despite g1 != e.
  {
    Word g1 = parse_word("x1 x2", x_alphabet(2));
    TowerElement lower = TowerElement::base(HolElement(invert(g1), Automorphism::identity(2)));
    TowerElement t = section(lower);
    Presentation p = make_presentation({"t", "x1", "x2", "x3"}, {"t x3 t^-1 = x3"});
    std::vector<TowerElement> a = {t, TowerElement::from_word(generator_word(3, 0)),
                                   TowerElement::from_word(generator_word(3, 1)),
                                   TowerElement::from_word(generator_word(3, 2))};
    report.add_negative_control("untwisted-top-relator", check_relators(p, a));
  }

  report.wall_ms = timer.ms();
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// suite_general_amalgam

namespace {

struct FiniteD {
  std::string label;
  std::vector<std::string> names;        // presentation generator names
  std::vector<Automorphism> gens;        // Aut(F_2) realizations
  std::vector<std::string> relators;     // over `names`
};

std::vector<FiniteD> finite_d_choices() {
  const AutF2Basis& b = AutF2Basis::get();
  return {
      {"trivial", {}, {}, {}},
      {"Z2", {"p"}, {b.p}, {"p^2"}},
      {"Z4", {"x"}, {b.x}, {"x^4"}},
      {"D4", {"p", "x"}, {b.p, b.x}, {"p^2", "x^4", "(p x)^2"}},
  };
}

}  // namespace

SuiteReport suite_general_amalgam(const SuiteParams& params) {
  params.validate();
  Timer timer;
  SuiteReport report;
  report.suite = "suite_general_amalgam";
  report.params = params;

  int n = std::max(params.level, 3);
  const int rank = n + 1;
  const Alphabet big = x_alphabet(rank);

  for (const FiniteD& d : finite_d_choices()) {
    std::string tag = "n=" + std::to_string(n) + "/D=" + d.label + "/";

    // Generators: x1..x_{n+1}, xi, then the D generators.
    std::vector<std::string> gen_names;
    for (int i = 1; i <= rank; ++i) gen_names.push_back(xname(i));
    gen_names.push_back("xi");
    for (const auto& nm : d.names) gen_names.push_back(nm);

    std::vector<std::string> relators;
    for (const auto& rel : d.relators) relators.push_back(rel);
    for (const auto& nm : d.names) {
      // The D action on x1, x2 and its commutation with everything above.
      const Automorphism& a = d.gens[static_cast<size_t>(&nm - d.names.data())];
      relators.push_back(nm + " x1 " + nm + "^-1 = " + spell(a.image(0), rank));
      relators.push_back(nm + " x2 " + nm + "^-1 = " + spell(a.image(1), rank));
      for (int i = 3; i <= rank; ++i) relators.push_back(nm + " " + xname(i) + " " + nm + "^-1 = " + xname(i));
      relators.push_back("xi " + nm + " xi^-1 = " + nm);
    }
    for (int j = 1; j <= n; ++j) relators.push_back("xi " + xname(j) + " xi^-1 = " + xname(j));
    relators.push_back("xi " + xname(rank) + " xi^-1 = " + xname(n) + " " + xname(rank) + " " + xname(n) + "^-1");
    Presentation p_g = make_presentation(gen_names, relators);

    // Realization at tower level n.
    std::vector<TowerElement> assignment;
    for (int i = 0; i < rank; ++i) assignment.push_back(TowerElement::from_word(generator_word(rank, i)));
    assignment.push_back(section(TowerElement::letter_conjugator(generator_word(n, n - 1))));
    for (const auto& a : d.gens) assignment.push_back(aut_at_level(a, n));
    report.add_report(tag + "presentation/", check_relators(p_g, assignment));

    // z = xn^-1 xi eliminates xn: x_{n+1} commutes with z afterwards.
    std::vector<std::string> new_names;
    for (int i = 1; i <= n - 1; ++i) new_names.push_back(xname(i));
    new_names.push_back("z");
    new_names.push_back(xname(rank));
    new_names.push_back("xi");
    for (const auto& nm : d.names) new_names.push_back(nm);

    std::vector<std::string> new_relators;
    for (const auto& rel : d.relators) new_relators.push_back(rel);
    for (const auto& nm : d.names) {
      const Automorphism& a = d.gens[static_cast<size_t>(&nm - d.names.data())];
      new_relators.push_back(nm + " x1 " + nm + "^-1 = " + spell(a.image(0), 2));
      new_relators.push_back(nm + " x2 " + nm + "^-1 = " + spell(a.image(1), 2));
      for (int i = 3; i <= n - 1; ++i) new_relators.push_back(nm + " " + xname(i) + " " + nm + "^-1 = " + xname(i));
      new_relators.push_back(nm + " " + xname(rank) + " " + nm + "^-1 = " + xname(rank));
      new_relators.push_back("xi " + nm + " xi^-1 = " + nm);
      new_relators.push_back("z " + nm + " z^-1 = " + nm);
    }
    for (int j = 1; j <= n - 1; ++j) new_relators.push_back("xi " + xname(j) + " xi^-1 = " + xname(j));
    new_relators.push_back("xi z xi^-1 = z");
    new_relators.push_back("z " + xname(rank) + " z^-1 = " + xname(rank));
    Presentation p_new = make_presentation(new_names, new_relators);

    std::vector<Word> old_in_new = word_map(p_g, p_new.generators, {{xname(n), "xi z^-1"}});
    std::vector<Word> new_in_old = word_map(p_new, p_g.generators, {{"z", xname(n) + "^-1 xi"}});
    report.add_report(tag + "z-substitution/", verify_substitution(p_g, p_new, old_in_new, new_in_old, assignment));

    // Amalgam G = G1 *_{Z x E(D)} G2 over the substituted presentation.
    std::vector<TowerElement> new_assignment;
    {
      TowerElement id = group_id(assignment.front());
      for (const Word& w : new_in_old) new_assignment.push_back(evaluate_word(w, assignment, id));
    }
    AmalgamFactor g1_factor;
    {
      std::vector<std::string> names = {"x1", "x2", "xi"};
      for (const auto& nm : d.names) names.push_back(nm);
      std::vector<std::string> rels;
      for (const auto& rel : d.relators) rels.push_back(rel);
      for (const auto& nm : d.names) {
        const Automorphism& a = d.gens[static_cast<size_t>(&nm - d.names.data())];
        rels.push_back(nm + " x1 " + nm + "^-1 = " + spell(a.image(0), 2));
        rels.push_back(nm + " x2 " + nm + "^-1 = " + spell(a.image(1), 2));
        rels.push_back("xi " + nm + " xi^-1 = " + nm);
      }
      rels.push_back("xi x1 xi^-1 = x1");
      rels.push_back("xi x2 xi^-1 = x2");
      g1_factor.presentation = make_presentation(names, rels);
      g1_factor.ambient_names = names;
    }
    AmalgamFactor g2_factor;
    std::vector<std::string> core_names;
    std::vector<std::string> core_rels;
    {
      std::vector<std::string> names;
      for (int i = 3; i <= n - 1; ++i) names.push_back(xname(i));
      names.push_back(xname(rank));
      names.push_back("z");
      names.push_back("xi");
      core_names = names;
      for (int i = 3; i <= n - 1; ++i) core_rels.push_back("xi " + xname(i) + " xi^-1 " + xname(i) + "^-1");
      core_rels.push_back("xi z xi^-1 z^-1");
      core_rels.push_back("z " + xname(rank) + " z^-1 " + xname(rank) + "^-1");
      std::vector<std::string> rels = core_rels;
      for (const auto& nm : d.names) names.push_back(nm);
      for (const auto& rel : d.relators) rels.push_back(rel);
      for (const auto& nm : d.names) {
        for (int i = 3; i <= n - 1; ++i) rels.push_back(nm + " " + xname(i) + " " + nm + "^-1 = " + xname(i));
        rels.push_back(nm + " " + xname(rank) + " " + nm + "^-1 = " + xname(rank));
        rels.push_back("z " + nm + " z^-1 = " + nm);
        rels.push_back("xi " + nm + " xi^-1 = " + nm);
      }
      g2_factor.presentation = make_presentation(names, rels);
      g2_factor.ambient_names = names;
    }
    std::vector<std::string> edge = {"xi"};
    for (const auto& nm : d.names) edge.push_back(nm);
    report.add_report(tag + "amalgam/", verify_amalgam(p_new, g1_factor, g2_factor, edge, new_assignment));

    // The G2 core (without the E(D) direct factor) is a right-angled Artin
    // presentation.
    Presentation core = make_presentation(core_names, core_rels);
    report.add(tag + "raag/core", raag_check(core));
  }

  // A relator that is a proper power is not a RAAG relator.
  Presentation not_raag = make_presentation({"g", "h"}, {"g^2"});
  report.add("negative-control/raag-rejects-torsion", !raag_check(not_raag));
  Presentation free_pres;
  free_pres.generators = Alphabet({"g", "h"});
  report.add("raag/free-group-is-raag", raag_check(free_pres));

  report.wall_ms = timer.ms();
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// suite_appendix_cases

namespace {

// t2 candidate with images x1 -> x2^k x1^{e1} x2^-k, x2 -> x2^{e2}.
Automorphism t2_aut(long long k, int e1, int e2) {
  Word a = generator_word(2, 0), b = generator_word(2, 1);
  Endomorphism diag(2, {power(a, e1), power(b, e2)});
  return compose(inner(power(b, k)), verify_automorphism(diag, diag));
}

std::vector<std::string> f2_case_relators(const std::string& t2name, long long k, int e1, int e2) {
  std::string ks = std::to_string(k);
  return {
      "t1 x1 t1^-1 = x1^-1",
      "t1 x2 t1^-1 = x2",
      "t1^2",
      "t1 " + t2name + " t1^-1 = " + t2name,
      t2name + " x1 " + t2name + "^-1 = x2^" + ks + " x1^" + std::to_string(e1) + " x2^" + std::to_string(-k),
      t2name + " x2 " + t2name + "^-1 = x2^" + std::to_string(e2),
  };
}

std::vector<std::string> xi_form_relators(const std::string& xiname, int e1, int e2) {
  return {
      "t1 x1 t1^-1 = x1^-1",
      "t1 x2 t1^-1 = x2",
      "t1^2",
      "t1 " + xiname + " t1^-1 = " + xiname,
      xiname + " x1 " + xiname + "^-1 = x1^" + std::to_string(e1),
      xiname + " x2 " + xiname + "^-1 = x2^" + std::to_string(e2),
  };
}

// L1 / L2 / L amalgam data for the xi-form presentation, per case signs.
template <GroupElement T>
void check_case_amalgam(SuiteReport& report, const std::string& tag, int e1, int e2,
                        const Presentation& p_xi, const std::vector<T>& xi_assignment) {
  AmalgamFactor l1;
  {
    std::vector<std::string> rels = {"t1^2", "t1 x2 t1^-1 = x2", "t1 xi t1^-1 = xi"};
    rels.push_back(e2 > 0 ? "xi x2 xi^-1 = x2" : "xi x2 xi^-1 = x2^-1");
    l1.presentation = make_presentation({"x2", "t1", "xi"}, rels);
    l1.ambient_names = {"x2", "t1", "xi"};
  }
  AmalgamFactor l2;
  {
    std::vector<std::string> rels = {"t1 x1 t1^-1 = x1^-1", "t1^2", "t1 xi t1^-1 = xi"};
    rels.push_back(e1 > 0 ? "xi x1 xi^-1 = x1" : "xi x1 xi^-1 = x1^-1");
    l2.presentation = make_presentation({"x1", "t1", "xi"}, rels);
    l2.ambient_names = {"x1", "t1", "xi"};
  }
  report.add_report(tag, verify_amalgam(p_xi, l1, l2, {"t1", "xi"}, xi_assignment));
}

}  // namespace

SuiteReport suite_appendix_cases(const SuiteParams& params) {
  params.validate();
  Timer timer;
  SuiteReport report;
  report.suite = "suite_appendix_cases";
  report.params = params;

  const AutF2Basis& basis = AutF2Basis::get();
  const int case_signs[4][2] = {{+1, +1}, {-1, +1}, {+1, -1}, {-1, -1}};

  // Part A: the F_2 cases inside Hol(F_2), for every k and all four cases.
  for (int k : params.k_values) {
    for (int case_no = 1; case_no <= 4; ++case_no) {
      int e1 = case_signs[case_no - 1][0], e2 = case_signs[case_no - 1][1];
      std::string tag = "f2/case" + std::to_string(case_no) + "/k=" + std::to_string(k) + "/";

      Automorphism t2 = t2_aut(k, e1, e2);
      std::vector<HolElement> assignment = {
          HolElement::from_aut(basis.t1), HolElement::from_aut(t2),
          HolElement::from_word(generator_word(2, 0)), HolElement::from_word(generator_word(2, 1))};
      Presentation p_case = make_presentation({"t1", "t2", "x1", "x2"}, f2_case_relators("t2", k, e1, e2));
      report.add_report(tag + "presentation/", check_relators(p_case, assignment));

      // xi = x2^-k t2 removes the conjugating power.
      Presentation p_xi = make_presentation({"t1", "x1", "x2", "xi"}, xi_form_relators("xi", e1, e2));
      std::string ks = std::to_string(k);
      std::vector<Word> old_in_new = word_map(p_case, p_xi.generators, {{"t2", "x2^" + ks + " xi"}});
      std::vector<Word> new_in_old = word_map(p_xi, p_case.generators, {{"xi", "x2^" + std::to_string(-k) + " t2"}});
      report.add_report(tag + "xi-substitution/", verify_substitution(p_case, p_xi, old_in_new, new_in_old, assignment));

      std::vector<HolElement> xi_assignment;
      {
        HolElement id = HolElement::identity(2);
        for (const Word& w : new_in_old) xi_assignment.push_back(evaluate_word(w, assignment, id));
      }

      if (case_no == 1 || case_no == 3) {
        check_case_amalgam(report, tag + "amalgam/", e1, e2, p_xi, xi_assignment);
      } else {
        // Cases 2 and 4 rewrite to cases 1 and 3 via xi2 = t1 xi.
        Presentation p_back = make_presentation({"t1", "x1", "x2", "xi2"}, xi_form_relators("xi2", -e1, e2));
        std::vector<Word> fwd = word_map(p_xi, p_back.generators, {{"xi", "t1 xi2"}});
        std::vector<Word> bwd = word_map(p_back, p_xi.generators, {{"xi2", "t1 xi"}});
        report.add_report(tag + "xi2-reduction/", verify_substitution(p_xi, p_back, fwd, bwd, xi_assignment));
      }
    }
  }

  // Part B, case 1 (t2 = x2^k below the free part) for 3 <= n <= level:
  // the diagonal lift conjugates every x_i, i >= 3, by x2^k.
  for (int n = 3; n <= std::max(params.level, 3); ++n) {
    for (int k : params.k_values) {
      std::string tag = "fn-free/n=" + std::to_string(n) + "/k=" + std::to_string(k) + "/";
      std::string ks = std::to_string(k);
      TowerElement t1 = aut_at_level(basis.t1, n - 1);
      TowerElement t2 = section(diagonal_x2_power(k, n - 2));

      std::vector<std::string> names;
      for (int i = 1; i <= n; ++i) names.push_back(xname(i));
      names.push_back("t1");
      names.push_back("t2");
      std::vector<std::string> rels = {"t1^2", "t1 x1 t1^-1 = x1^-1", "t1 t2 t1^-1 = t2"};
      for (int i = 2; i <= n; ++i) rels.push_back("t1 " + xname(i) + " t1^-1 = " + xname(i));
      rels.push_back("t2 x1 t2^-1 = x1");
      rels.push_back("t2 x2 t2^-1 = x2");
      for (int i = 3; i <= n; ++i)
        rels.push_back("t2 " + xname(i) + " t2^-1 = x2^" + ks + " " + xname(i) + " x2^" + std::to_string(-k));
      Presentation p = make_presentation(names, rels);

      std::vector<TowerElement> assignment;
      for (int i = 0; i < n; ++i) assignment.push_back(TowerElement::from_word(generator_word(n, i)));
      assignment.push_back(t1);
      assignment.push_back(t2);
      report.add_report(tag + "presentation/", check_relators(p, assignment));

      // xi = x2^-k t2 conjugates x1 by x2^-k and fixes everything else.
      std::vector<std::string> xi_names = names;
      xi_names.back() = "xi";
      std::vector<std::string> xi_rels = {"t1^2", "t1 x1 t1^-1 = x1^-1", "t1 xi t1^-1 = xi",
                                          "xi x1 xi^-1 = x2^" + std::to_string(-k) + " x1 x2^" + ks};
      for (int i = 2; i <= n; ++i) {
        xi_rels.push_back("t1 " + xname(i) + " t1^-1 = " + xname(i));
        xi_rels.push_back("xi " + xname(i) + " xi^-1 = " + xname(i));
      }
      Presentation p_xi = make_presentation(xi_names, xi_rels);
      std::vector<Word> old_in_new = word_map(p, p_xi.generators, {{"t2", "x2^" + ks + " xi"}});
      std::vector<Word> new_in_old = word_map(p_xi, p.generators, {{"xi", "x2^" + std::to_string(-k) + " t2"}});
      report.add_report(tag + "xi-substitution/", verify_substitution(p, p_xi, old_in_new, new_in_old, assignment));

      std::vector<TowerElement> xi_assignment;
      {
        TowerElement id = group_id(assignment.front());
        for (const Word& w : new_in_old) xi_assignment.push_back(evaluate_word(w, assignment, id));
      }

      // G = K1 *_{<t1, xi>} K2.
      AmalgamFactor k1;
      {
        std::vector<std::string> fn = {"t1", "xi"};
        for (int i = 3; i <= n; ++i) fn.push_back(xname(i));
        std::vector<std::string> fr = {"t1^2", "t1 xi t1^-1 = xi"};
        for (int i = 3; i <= n; ++i) {
          fr.push_back("t1 " + xname(i) + " t1^-1 = " + xname(i));
          fr.push_back("xi " + xname(i) + " xi^-1 = " + xname(i));
        }
        k1.presentation = make_presentation(fn, fr);
        k1.ambient_names = fn;
      }
      AmalgamFactor k2;
      {
        std::vector<std::string> fn = {"x1", "x2", "t1", "xi"};
        std::vector<std::string> fr = {"t1^2",
                                       "t1 x1 t1^-1 = x1^-1",
                                       "t1 x2 t1^-1 = x2",
                                       "t1 xi t1^-1 = xi",
                                       "xi x1 xi^-1 = x2^" + std::to_string(-k) + " x1 x2^" + ks,
                                       "xi x2 xi^-1 = x2"};
        k2.presentation = make_presentation(fn, fr);
        k2.ambient_names = fn;
      }
      report.add_report(tag + "amalgam/", verify_amalgam(p_xi, k1, k2, {"t1", "xi"}, xi_assignment));

      // zeta = x2^k xi acts trivially on x1 and x2 (it is t2 again).
      Presentation p_zeta = make_presentation({"x1", "x2", "t1", "zeta"},
                                              {"t1^2", "t1 x1 t1^-1 = x1^-1", "t1 x2 t1^-1 = x2",
                                               "t1 zeta t1^-1 = zeta", "zeta x1 zeta^-1 = x1", "zeta x2 zeta^-1 = x2"});
      std::vector<TowerElement> k2_assignment = {xi_assignment[0], xi_assignment[1], xi_assignment[n],
                                                 xi_assignment[n + 1]};
      std::vector<Word> k2_in_zeta = word_map(k2.presentation, p_zeta.generators, {{"xi", "x2^" + std::to_string(-k) + " zeta"}});
      std::vector<Word> zeta_in_k2 = word_map(p_zeta, k2.presentation.generators, {{"zeta", "x2^" + ks + " xi"}});
      report.add_report(tag + "zeta-substitution/",
                        verify_substitution(k2.presentation, p_zeta, k2_in_zeta, zeta_in_k2, k2_assignment));
    }
  }

  // Part B, case 2 (t2 an automorphism, acting only on x1, x2) for
  // 3 <= n <= level, all four sign cases and every k.
  for (int n = 3; n <= std::max(params.level, 3); ++n) {
    for (int k : params.k_values) {
      for (int case_no = 1; case_no <= 4; ++case_no) {
        int e1 = case_signs[case_no - 1][0], e2 = case_signs[case_no - 1][1];
        std::string tag = "fn-aut/n=" + std::to_string(n) + "/case" + std::to_string(case_no) +
                          "/k=" + std::to_string(k) + "/";
        std::string ks = std::to_string(k);
        TowerElement t1 = aut_at_level(basis.t1, n - 1);
        TowerElement t2 = aut_at_level(t2_aut(k, e1, e2), n - 1);

        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back(xname(i));
        names.push_back("t1");
        names.push_back("t2");
        std::vector<std::string> rels = {"t1^2", "t1 x1 t1^-1 = x1^-1", "t1 t2 t1^-1 = t2",
                                         "t2 x1 t2^-1 = x2^" + ks + " x1^" + std::to_string(e1) + " x2^" + std::to_string(-k),
                                         "t2 x2 t2^-1 = x2^" + std::to_string(e2)};
        for (int i = 2; i <= n; ++i) rels.push_back("t1 " + xname(i) + " t1^-1 = " + xname(i));
        for (int i = 3; i <= n; ++i) rels.push_back("t2 " + xname(i) + " t2^-1 = " + xname(i));
        Presentation p = make_presentation(names, rels);

        std::vector<TowerElement> assignment;
        for (int i = 0; i < n; ++i) assignment.push_back(TowerElement::from_word(generator_word(n, i)));
        assignment.push_back(t1);
        assignment.push_back(t2);
        report.add_report(tag + "presentation/", check_relators(p, assignment));

        // G = K1 *_{<t1, t2>} K2 with K2 the F_2 case group.
        AmalgamFactor k1;
        {
          std::vector<std::string> fn = {"t1", "t2"};
          for (int i = 3; i <= n; ++i) fn.push_back(xname(i));
          std::vector<std::string> fr = {"t1^2", "t1 t2 t1^-1 = t2"};
          for (int i = 3; i <= n; ++i) {
            fr.push_back("t1 " + xname(i) + " t1^-1 = " + xname(i));
            fr.push_back("t2 " + xname(i) + " t2^-1 = " + xname(i));
          }
          k1.presentation = make_presentation(fn, fr);
          k1.ambient_names = fn;
        }
        AmalgamFactor k2;
        {
          k2.presentation = make_presentation({"t1", "t2", "x1", "x2"}, f2_case_relators("t2", k, e1, e2));
          k2.ambient_names = {"t1", "t2", "x1", "x2"};
        }
        report.add_report(tag + "amalgam/", verify_amalgam(p, k1, k2, {"t1", "t2"}, assignment));

        // zeta = x2^-k t2 inside K2 lands in the F_2 xi-form.
        std::vector<TowerElement> k2_assignment = {assignment[n], assignment[n + 1], assignment[0], assignment[1]};
        Presentation p_zeta = make_presentation({"t1", "x1", "x2", "zeta"}, xi_form_relators("zeta", e1, e2));
        std::vector<Word> k2_in_zeta = word_map(k2.presentation, p_zeta.generators, {{"t2", "x2^" + ks + " zeta"}});
        std::vector<Word> zeta_in_k2 = word_map(p_zeta, k2.presentation.generators, {{"zeta", "x2^" + std::to_string(-k) + " t2"}});
        report.add_report(tag + "zeta-substitution/",
                          verify_substitution(k2.presentation, p_zeta, k2_in_zeta, zeta_in_k2, k2_assignment));
      }
    }
  }

  // Negative control: treating case 2 as case 1 without the xi2 = t1 xi
  // correction must fail.
  {
    Automorphism t2 = t2_aut(1, -1, +1);
    std::vector<HolElement> assignment = {
        HolElement::from_aut(basis.t1), HolElement::from_aut(t2),
        HolElement::from_word(generator_word(2, 0)), HolElement::from_word(generator_word(2, 1))};
    Presentation p_case = make_presentation({"t1", "t2", "x1", "x2"}, f2_case_relators("t2", 1, -1, +1));
    Presentation p_wrong = make_presentation({"t1", "x1", "x2", "xi"}, xi_form_relators("xi", +1, +1));
    std::vector<Word> old_in_new = word_map(p_case, p_wrong.generators, {{"t2", "x2 xi"}});
    std::vector<Word> new_in_old = word_map(p_wrong, p_case.generators, {{"xi", "x2^-1 t2"}});
    report.add_negative_control("case2-is-not-case1",
                                verify_substitution(p_case, p_wrong, old_in_new, new_in_old, assignment));
  }

  report.wall_ms = timer.ms();
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// suite_fp

SuiteReport suite_fp(const SuiteParams& params) {
  params.validate();
  Timer timer;
  SuiteReport report;
  report.suite = "suite_fp";
  report.params = params;

  // phi_i fixes a1, a2 and sends a3 to a3 a_i.
  auto phi = [&](int i) {
    Word a1 = generator_word(3, 0), a2 = generator_word(3, 1), a3 = generator_word(3, 2);
    Word ai = i == 1 ? a1 : a2;
    Endomorphism fwd(3, {a1, a2, multiply(a3, ai)});
    Endomorphism bwd(3, {a1, a2, multiply(a3, invert(ai))});
    return verify_automorphism(fwd, bwd);
  };
  Automorphism phi1 = phi(1), phi2 = phi(2);

  std::vector<HolElement> assignment = {
      HolElement::from_word(generator_word(3, 0)), HolElement::from_word(generator_word(3, 1)),
      HolElement::from_word(generator_word(3, 2)), HolElement::from_aut(phi1), HolElement::from_aut(phi2)};
  Presentation fp = make_presentation({"a1", "a2", "a3", "f1", "f2"},
                                      {"f1 a1 f1^-1 = a1", "f1 a2 f1^-1 = a2", "f2 a1 f2^-1 = a1",
                                       "f2 a2 f2^-1 = a2", "f1 a3 f1^-1 = a3 a1", "f2 a3 f2^-1 = a3 a2"});
  report.add_report("relators/", check_relators(fp, assignment));

  // <f1, a1> is a Z x Z witness: the commutator relator holds and both
  // factors have infinite order.
  report.add("zxz/[f1,a1]=1",
             hol_multiply(assignment[3], assignment[0]) == hol_multiply(assignment[0], assignment[3]));
  report.add("zxz/order(f1)>64", !order_of(assignment[3], 64).finite);
  report.add("zxz/order(a1)>64", !order_of(assignment[0], 64).finite);

  // Random words v(f1, f2): the action fixes a1, a2 and sends a3 to a3 c
  // with c a word in a1, a2 only.
  std::mt19937_64 rng(params.seed);
  int sample_count = std::max(params.samples, 100);
  size_t failures = 0;
  std::string witness;
  std::uniform_int_distribution<int> len_dist(1, 8);
  std::uniform_int_distribution<int> which(0, 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (int s = 0; s < sample_count; ++s) {
    int len = len_dist(rng);
    HolElement v = HolElement::identity(3);
    for (int i = 0; i < len; ++i) {
      const Automorphism& f = which(rng) ? phi2 : phi1;
      HolElement g = HolElement::from_aut(sgn(rng) ? f : invert(f));
      v = hol_multiply(v, g);
    }
    bool ok = v.free_part.is_identity() && v.aut_part.image(0) == generator_word(3, 0) &&
              v.aut_part.image(1) == generator_word(3, 1);
    const Word& im3 = v.aut_part.image(2);
    ok = ok && im3.length() >= 1 && im3.letter_at(0) == letter(2, +1);
    for (size_t i = 1; ok && i < im3.length(); ++i)
      if (letter_gen(im3.letter_at(i)) == 2) ok = false;
    if (!ok) {
      ++failures;
      if (witness.empty()) witness = "sample " + std::to_string(s) + ": " + to_string(v.aut_part, x_alphabet(3));
    }
  }
  report.add("action/" + std::to_string(sample_count) + "-random-words-fix-a1-a2-and-shift-a3", failures == 0, witness);

  // v = f1 gives c = a1; v = f2 f1^-1 gives c = a2 a1^-1.
  report.add("action/f1-shifts-by-a1", phi1.image(2) == parse_word("x3 x1", x_alphabet(3)));
  Automorphism v21 = compose(phi2, invert(phi1));
  report.add("action/f2-f1^-1-shifts-by-a2-a1^-1", v21.image(2) == parse_word("x3 x2 x1^-1", x_alphabet(3)));

  // Negative control: claiming f1 fixes a3 must fail.
  Presentation wrong = make_presentation({"a1", "a2", "a3", "f1", "f2"}, {"f1 a3 f1^-1 = a3"});
  report.add_negative_control("f1-does-not-fix-a3", check_relators(wrong, assignment));

  report.wall_ms = timer.ms();
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// suite_finite_orders

SuiteReport suite_finite_orders(const SuiteParams& params) {
  params.validate();
  Timer timer;
  SuiteReport report;
  report.suite = "suite_finite_orders";
  report.params = params;

  const AutF2Basis& b = AutF2Basis::get();
  std::vector<Automorphism> ball = enumerate_ball(autf2_assignment(), params.radius, params.ball_cap());
  report.add("ball/size=" + std::to_string(ball.size()), true);
  report.add("scope/evidence-at-radius-" + std::to_string(params.radius), true,
             "ball-bounded evidence, not a proof");

  // Histogram of orders over the ball. Elements whose GL2 image has infinite
  // order are infinite; the rest are iterated with cap 12, which would
  // expose any finite order in 5..12.
  std::map<long long, size_t> histogram;
  size_t infinite = 0;
  size_t out_of_range = 0;
  std::string out_witness;
  for (const auto& f : ball) {
    if (!gl2_has_finite_order(abelianize(f))) {
      ++infinite;
      continue;
    }
    OrderResult r = order_of(f, 12);
    if (!r.finite) {
      ++infinite;
      continue;
    }
    ++histogram[r.order];
    if (r.order > 4) {
      ++out_of_range;
      if (out_witness.empty()) out_witness = to_string(f, kAB) + " has order " + std::to_string(r.order);
    }
  }
  std::ostringstream hist;
  hist << "histogram/";
  for (const auto& [ord, count] : histogram) hist << ord << ":" << count << " ";
  hist << "inf:" << infinite;
  report.add(hist.str(), true);
  report.add("orders-in-{1,2,3,4}", out_of_range == 0, out_witness);

  // Explicit witnesses: Z/3 = <x^2 y>, Z/4 = <x>, D2 = <p, x^2>, D4 = <p, x>.
  Automorphism z3 = compose(power(b.x, 2), b.y);
  report.add("witness/Z3/order=3", order_of(z3, 12) == OrderResult{true, 3});
  report.add("witness/Z4/order(x)=4", order_of(b.x, 12) == OrderResult{true, 4});
  report.add("witness/Z2/order(p)=2", order_of(b.p, 12) == OrderResult{true, 2});
  report.add("witness/order(x^2)=2", order_of(power(b.x, 2), 12) == OrderResult{true, 2});
  {
    std::vector<Automorphism> d2 = enumerate_ball(std::vector<Automorphism>{b.p, power(b.x, 2)}, 4, params.ball_cap());
    bool commutes = compose(b.p, power(b.x, 2)) == compose(power(b.x, 2), b.p);
    report.add("witness/D2/order=4-and-abelian", d2.size() == 4 && commutes, std::to_string(d2.size()));
    std::vector<Automorphism> d4 = enumerate_ball(std::vector<Automorphism>{b.p, b.x}, 8, params.ball_cap());
    bool dihedral = compose(compose(b.p, b.x), b.p) == invert(b.x);
    report.add("witness/D4/order=8-and-dihedral", d4.size() == 8 && dihedral, std::to_string(d4.size()));
  }

  // D4 x Z inside the level-2 extension: <p, x> lifted, with the central
  // letter x3 of the new free part.
  {
    TowerElement P = aut_at_level(b.p, 2);
    TowerElement X = aut_at_level(b.x, 2);
    TowerElement Z = TowerElement::from_word(generator_word(3, 2));
    std::vector<TowerElement> d4xz_gens = {P, X};
    std::vector<TowerElement> d4 = enumerate_ball(d4xz_gens, 8, params.ball_cap());
    report.add("d4xz/lifted-D4-order=8", d4.size() == 8, std::to_string(d4.size()));
    report.add("d4xz/[p,z]=1", tower_multiply(P, Z) == tower_multiply(Z, P));
    report.add("d4xz/[x,z]=1", tower_multiply(X, Z) == tower_multiply(Z, X));
    report.add("d4xz/order(z)>32", !order_of(Z, 32).finite);

    // The letters above the base commute with the lifted automorphism copy
    // of Aut(F_2) (the subgroups the finite groups live in); elements with a
    // free part conjugate x3 and do not.
    std::mt19937_64 rng(params.seed);
    bool all_commute = true;
    std::string witness;
    for (int s = 0; s < params.samples; ++s) {
      TowerElement lifted = aut_at_level(random_basis_aut(rng, 4), 2);
      if (tower_multiply(lifted, Z) != tower_multiply(Z, lifted)) {
        all_commute = false;
        if (witness.empty()) witness = to_string(lifted);
        break;
      }
    }
    report.add("d4xz/aut-f2-commutes-with-x3", all_commute, witness);
    TowerElement free_lift = section(TowerElement::base(HolElement::from_word(generator_word(2, 0))));
    report.add("d4xz/free-part-does-not-commute-with-x3",
               tower_multiply(free_lift, Z) != tower_multiply(Z, free_lift));
  }

  // Negative control: <p, x> is not abelian.
  report.add("negative-control/d4-not-abelian", compose(b.p, b.x) != compose(b.x, b.p));

  report.wall_ms = timer.ms();
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "suite_autf2_presentation", "suite_normalizer_d4", "suite_commuting_with_t1", "suite_mapping_torus",
      "suite_general_amalgam",    "suite_appendix_cases", "suite_fp",               "suite_finite_orders",
  };
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  std::string full = name.rfind("suite_", 0) == 0 ? name : "suite_" + name;
  if (full == "suite_autf2_presentation") return suite_autf2_presentation(params);
  if (full == "suite_normalizer_d4") return suite_normalizer_d4(params);
  if (full == "suite_commuting_with_t1") return suite_commuting_with_t1(params);
  if (full == "suite_mapping_torus") return suite_mapping_torus(params);
  if (full == "suite_general_amalgam") return suite_general_amalgam(params);
  if (full == "suite_appendix_cases") return suite_appendix_cases(params);
  if (full == "suite_fp") return suite_fp(params);
  if (full == "suite_finite_orders") return suite_finite_orders(params);
  throw error("unknown suite: " + name);
}

}  // namespace holkit
