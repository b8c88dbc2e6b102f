#include "holkit/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace holkit {

Alphabet::Alphabet(std::vector<std::string> generator_names) : names(std::move(generator_names)) {
  if (names.empty()) throw error("alphabet must have rank >= 1");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw error("alphabet names must be non-empty");
    if (!seen.insert(n).second) throw error("duplicate generator name: " + n);
  }
}

std::optional<int> Alphabet::index_of(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

Alphabet Alphabet::numbered(int rank) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(rank));
  for (int i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  return Alphabet(std::move(names));
}

Alphabet Alphabet::ab() { return Alphabet({"a", "b"}); }

Word Word::promoted(int new_rank) const {
  if (new_rank < rank_) throw mismatch_error("cannot demote word to smaller rank");
  Word out(new_rank);
  out.letters_ = letters_;
  return out;
}

void WordBuilder::push(Letter l) {
  int g = letter_gen(l);
  if (g < 0 || g >= rank_) throw mismatch_error("letter refers to generator " + std::to_string(g + 1) + " outside rank-" + std::to_string(rank_) + " alphabet");
  if (!letters_.empty() && letters_.back() == -l)
    letters_.pop_back();
  else
    letters_.push_back(l);
}

void WordBuilder::append(const Word& w) {
  for (Letter l : w.letters()) push(l);
}

void WordBuilder::append_inverse(const Word& w) {
  auto ls = w.letters();
  for (size_t i = ls.size(); i > 0; --i) push(-ls[i - 1]);
}

void WordBuilder::append_power(const Word& w, long long k) {
  if (k >= 0)
    for (long long i = 0; i < k; ++i) append(w);
  else
    for (long long i = 0; i < -k; ++i) append_inverse(w);
}

Word WordBuilder::take() {
  Word out(rank_);
  out.letters_ = std::move(letters_);
  letters_.clear();
  return out;
}

Word reduce(int rank, std::span<const Letter> raw) {
  WordBuilder b(rank);
  for (Letter l : raw) b.push(l);
  return b.take();
}

Word multiply(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw mismatch_error("product of words over different alphabets (ranks " + std::to_string(u.rank()) + " and " + std::to_string(v.rank()) + ")");
  WordBuilder b(u.rank());
  b.append(u);
  b.append(v);
  return b.take();
}

Word invert(const Word& u) {
  WordBuilder b(u.rank());
  b.append_inverse(u);
  return b.take();
}

Word power(const Word& u, long long k) {
  WordBuilder b(u.rank());
  b.append_power(u, k);
  return b.take();
}

Word conjugate(const Word& c, const Word& u) {
  if (c.rank() != u.rank()) throw mismatch_error("conjugation across different alphabets");
  WordBuilder b(c.rank());
  b.append(c);
  b.append(u);
  b.append_inverse(c);
  return b.take();
}

Word generator_word(int rank, int gen, int sign) {
  WordBuilder b(rank);
  b.push(letter(gen, sign));
  return b.take();
}

Word substitute(const Word& u, std::span<const Word> images) {
  if (static_cast<int>(images.size()) < u.rank())
    throw mismatch_error("substitution is missing images: got " + std::to_string(images.size()) + " for rank " + std::to_string(u.rank()));
  int target = images.empty() ? u.rank() : images[0].rank();
  for (const Word& im : images)
    if (im.rank() != target) throw mismatch_error("substitution images live in different alphabets");
  WordBuilder b(target);
  for (Letter l : u.letters()) {
    const Word& im = images[static_cast<size_t>(letter_gen(l))];
    if (letter_sign(l) > 0)
      b.append(im);
    else
      b.append_inverse(im);
  }
  return b.take();
}

long long exponent_sum(const Word& u, int gen) {
  long long s = 0;
  for (Letter l : u.letters())
    if (letter_gen(l) == gen) s += letter_sign(l);
  return s;
}

namespace {

// w must be d * g * d^-1 in reduced form: odd length, positive g in the
// middle, mirrored inverse letters around it. Returns d.
std::optional<Word> conjugating_prefix(int rank, int gen, const Word& w) {
  auto ls = w.letters();
  if (ls.size() % 2 == 0) return std::nullopt;
  size_t m = ls.size() / 2;
  if (ls[m] != letter(gen, +1)) return std::nullopt;
  for (size_t i = 0; i < m; ++i)
    if (ls[i] != -ls[ls.size() - 1 - i]) return std::nullopt;
  WordBuilder b(rank);
  for (size_t i = 0; i < m; ++i) b.push(ls[i]);
  return b.take();
}

}  // namespace

std::optional<Word> extract_conjugator(int rank, std::span<const std::pair<int, Word>> pairs) {
  if (pairs.empty()) return Word(rank);
  // Each pair (g, w) with w = d g d^-1 admits exactly the solutions d * g^k.
  // A word can end in powers of at most one generator, so with two or more
  // distinct generators the answer is one of the prefixes d_i; verify each
  // candidate against every pair.
  std::vector<Word> candidates;
  for (const auto& [gen, image] : pairs) {
    if (gen < 0 || gen >= rank) throw mismatch_error("conjugator pair names generator outside alphabet");
    if (image.rank() != rank) throw mismatch_error("conjugator image over wrong alphabet");
    auto d = conjugating_prefix(rank, gen, image);
    if (!d) return std::nullopt;
    candidates.push_back(*d);
  }
  // With a single pair the k = 0 solution is the canonical one.
  if (pairs.size() == 1) return candidates[0];
  // Strip trailing powers of the *other* pair's generator from each prefix:
  // if c = d_i * g_i^k with k != 0, then c equals d_j for every j != i.
  for (const Word& c : candidates) {
    bool ok = true;
    for (const auto& [gen, image] : pairs) {
      if (conjugate(c, generator_word(rank, gen)) != image) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  return std::nullopt;
}

std::string to_string(const Word& u, const Alphabet& alphabet) {
  if (u.is_identity()) return "e";
  std::ostringstream out;
  auto ls = u.letters();
  size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long long run = static_cast<long long>(j - i) * letter_sign(ls[i]);
    if (!first) out << ' ';
    first = false;
    out << alphabet.name(letter_gen(ls[i]));
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

std::string to_string(const Word& u) { return to_string(u, Alphabet::numbered(std::max(u.rank(), 1))); }

}  // namespace holkit
