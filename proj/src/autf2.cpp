#include "holkit/autf2.hpp"

#include <sstream>

#include "holkit/expr.hpp"

namespace holkit {

namespace {

Word ab_word(const std::string& text) { return parse_word(text, Alphabet::ab()); }

AutF2Basis build_basis() {
  AutF2Basis b;
  b.p = verify_automorphism(Endomorphism(2, {ab_word("b"), ab_word("a")}),
                            Endomorphism(2, {ab_word("b"), ab_word("a")}));
  b.x = verify_automorphism(Endomorphism(2, {ab_word("b^-1"), ab_word("a")}),
                            Endomorphism(2, {ab_word("b"), ab_word("a^-1")}));
  b.y = verify_automorphism(Endomorphism(2, {ab_word("a b^-1"), ab_word("a")}),
                            Endomorphism(2, {ab_word("b"), ab_word("a^-1 b")}));
  b.ta = inner(ab_word("a"));
  b.tb = inner(ab_word("b"));
  b.t1 = compose(b.p, b.x);
  return b;
}

}  // namespace

const AutF2Basis& AutF2Basis::get() {
  static const AutF2Basis basis = build_basis();
  return basis;
}

Automorphism autf2_constant(const std::string& name) {
  const AutF2Basis& b = AutF2Basis::get();
  if (name == "p") return b.p;
  if (name == "x") return b.x;
  if (name == "y") return b.y;
  if (name == "ta") return b.ta;
  if (name == "tb") return b.tb;
  if (name == "t1") return b.t1;
  if (name == "id") return Automorphism::identity(2);
  throw error("unknown automorphism constant: " + name);
}

IntMatrix gl2_P() { return IntMatrix{{0, 1}, {1, 0}}; }
IntMatrix gl2_X() { return IntMatrix{{0, 1}, {-1, 0}}; }
IntMatrix gl2_Y() { return IntMatrix{{1, 1}, {-1, 0}}; }

Gl2Element::Gl2Element(IntMatrix m) : mat(std::move(m)) {
  if (mat.size() != 2) throw mismatch_error("GL2 element must be 2x2");
  long long d = mat.det();
  if (d != 1 && d != -1) throw error("GL2 element needs determinant +-1, got " + std::to_string(d));
}

Gl2Element project_gl2(const Automorphism& f) {
  if (f.rank() != 2) throw mismatch_error("project_gl2 expects an automorphism of F_2");
  return Gl2Element(abelianize(f));
}

namespace {

constexpr Letter kX = letter(0, +1);

// Appends one PSL_2(Z) = Z/2 * Z/3 letter to an alternating-reduced syllable
// stack. Sign flips (X^2 = -I, Y^2 = -Y^-1) are central and are recovered at
// the end from the residual matrix, so they are not tracked here.
void push_x_syllable(std::vector<Letter>& syll) {
  if (!syll.empty() && syll.back() == kX)
    syll.pop_back();
  else
    syll.push_back(kX);
}

void push_y_syllable(std::vector<Letter>& syll, int e) {
  if (!syll.empty() && syll.back() != kX) {
    int prev = letter_sign(syll.back());
    int sum = prev + e;
    if (sum == 0)
      syll.pop_back();
    else  // +-2: fold through Y^2 = -Y^-1
      syll.back() = letter(1, sum > 0 ? -1 : +1);
  } else {
    syll.push_back(letter(1, e));
  }
}

// T = X Y^-1 and T^-1 = Y X^-1; X^-1 differs from X by the central -I.
void push_translation_power(std::vector<Letter>& syll, long long q) {
  for (long long i = 0; i < q; ++i) {
    push_x_syllable(syll);
    push_y_syllable(syll, -1);
  }
  for (long long i = 0; i < -q; ++i) {
    push_y_syllable(syll, +1);
    push_x_syllable(syll);
  }
}

long long euclid_quot(long long a, long long c) {
  long long m = a % c;
  if (m < 0) m += (c > 0 ? c : -c);
  return (a - m) / c;
}

}  // namespace

Gl2Decomposition gl2_decompose(const IntMatrix& m) {
  Gl2Element checked(m);
  Gl2Decomposition out;
  out.r = m.det() < 0 ? 1 : 0;
  IntMatrix n = out.r ? gl2_P() * m : m;

  // Euclidean reduction on the first column: N = T^{q1} X T^{q2} X ... T^{qk} (+-I),
  // strictly shrinking |c| each round.
  std::vector<Letter> syll;
  IntMatrix t_inv = IntMatrix{{1, -1}, {0, 1}};
  IntMatrix x_inv = gl2_X().inverse();
  IntMatrix work = n;
  while (work.at(1, 0) != 0) {
    long long q = euclid_quot(work.at(0, 0), work.at(1, 0));
    push_translation_power(syll, q);
    push_x_syllable(syll);
    work = x_inv * t_inv.pow(q) * work;
  }
  // work = [[d, b],[0, d]] with d = +-1: equals d * T^{d*b}.
  push_translation_power(syll, work.at(0, 0) * work.at(0, 1));

  Word u(2);
  {
    WordBuilder b(2);
    for (Letter l : syll) b.push(l);
    u = b.take();
  }
  out.u = u;

  IntMatrix evaluated = IntMatrix::identity(2);
  for (Letter l : u.letters()) evaluated = evaluated * (letter_gen(l) == 0 ? gl2_X() : gl2_Y().pow(letter_sign(l)));
  IntMatrix residue = evaluated.inverse() * n;
  if (residue.is_identity())
    out.s = 0;
  else if ((gl2_X() * gl2_X() * residue).is_identity())  // residue = -I
    out.s = 1;
  else
    throw internal_error("GL2 decomposition residue is not central: " + residue.str());
  if (!(gl2_evaluate(out) == m)) throw internal_error("GL2 decomposition does not round-trip for " + m.str());
  return out;
}

IntMatrix gl2_evaluate(const Gl2Decomposition& d) {
  IntMatrix out = d.r ? gl2_P() : IntMatrix::identity(2);
  for (Letter l : d.u.letters()) out = out * (letter_gen(l) == 0 ? gl2_X() : gl2_Y().pow(letter_sign(l)));
  return out * gl2_X().pow(2 * d.s);
}

NormalForm normal_form(const Automorphism& f) {
  const AutF2Basis& basis = AutF2Basis::get();
  Gl2Decomposition d = gl2_decompose(abelianize(f));
  Automorphism prefix = power(basis.p, d.r);
  for (Letter l : d.u.letters())
    prefix = compose(prefix, letter_gen(l) == 0 ? basis.x : power(basis.y, letter_sign(l)));
  prefix = compose(prefix, power(basis.x, 2 * d.s));
  Automorphism residue = compose(invert(prefix), f);
  std::vector<std::pair<int, Word>> pairs = {{0, residue.image(0)}, {1, residue.image(1)}};
  auto c = extract_conjugator(2, pairs);
  if (!c)
    throw internal_error("normal form residue is not inner; projection kernel violated for " +
                         to_string(f, Alphabet::ab()));
  NormalForm nf;
  nf.r = d.r;
  nf.u = d.u;
  nf.s = d.s;
  nf.w = *c;  // letters over a, b reread as ta, tb
  return nf;
}

Automorphism evaluate(const NormalForm& nf) {
  const AutF2Basis& basis = AutF2Basis::get();
  Automorphism acc = power(basis.p, nf.r);
  for (Letter l : nf.u.letters())
    acc = compose(acc, letter_gen(l) == 0 ? basis.x : power(basis.y, letter_sign(l)));
  acc = compose(acc, power(basis.x, 2 * nf.s));
  return compose(acc, inner(nf.w));
}

std::string to_string(const NormalForm& nf) {
  static const Alphabet u_names({"x", "y"});
  static const Alphabet w_names({"ta", "tb"});
  std::ostringstream out;
  out << "p^" << nf.r << " · " << to_string(nf.u, u_names) << " · x^" << (2 * nf.s) << " · "
      << to_string(nf.w, w_names);
  return out.str();
}

Presentation autf2_presentation() {
  Alphabet gens({"p", "x", "y", "ta", "tb"});
  Presentation pres;
  pres.generators = gens;
  for (const char* rel : {
           "x^4",
           "p^2",
           "(p x)^2",
           "(p y)^2 = tb",
           "x^2 = y^3 tb^-1 ta",
           "p^-1 ta p = tb",
           "x^-1 ta x = tb",
           "y^-1 ta y = tb",
           "p^-1 tb p = ta",
           "x^-1 tb x = ta^-1",
           "y^-1 tb y = ta^-1 tb",
       })
    pres.add_relator(rel, parse_relator(rel, gens));
  return pres;
}

std::vector<Automorphism> autf2_assignment() {
  const AutF2Basis& b = AutF2Basis::get();
  return {b.p, b.x, b.y, b.ta, b.tb};
}

Presentation gl2_presentation() {
  Alphabet gens({"P", "X", "Y"});
  Presentation pres;
  pres.generators = gens;
  for (const char* rel : {"X^4", "P^2", "(P X)^2", "(P Y)^2", "X^2 = Y^3"})
    pres.add_relator(rel, parse_relator(rel, gens));
  return pres;
}

std::vector<IntMatrix> gl2_assignment() { return {gl2_P(), gl2_X(), gl2_Y()}; }

size_t default_ball_cap() {
  if (const char* env = std::getenv("HOLKIT_MAX_BALL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return 1'000'000;
}

bool gl2_has_finite_order(const IntMatrix& m) { return m.pow(12).is_identity(); }

}  // namespace holkit
