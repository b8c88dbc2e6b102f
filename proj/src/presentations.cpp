#include "holkit/presentations.hpp"

#include <sstream>

#include "holkit/expr.hpp"
#include "json.hpp"

namespace holkit {

Presentation::Presentation(Alphabet gens, std::vector<std::pair<std::string, Word>> named_relators)
    : generators(std::move(gens)) {
  for (auto& [name, rel] : named_relators) add_relator(name, rel);
}

int Presentation::gen_index(const std::string& name) const {
  auto idx = generators.index_of(name);
  if (!idx) throw mismatch_error("presentation has no generator named " + name);
  return *idx;
}

void Presentation::add_relator(const std::string& name, const Word& relator) {
  if (relator.rank() != generators.rank()) throw mismatch_error("relator over wrong alphabet: " + name);
  relators.push_back(relator);
  relator_names.push_back(name);
}

void CheckReport::add(std::string name, bool ok, std::string witness) {
  checks.push_back({std::move(name), ok, std::move(witness)});
  passed = passed && ok;
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.relator, c.passed, c.witness});
  passed = passed && other.passed;
}

std::string CheckReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.relator;
  return "";
}

std::string CheckReport::to_json() const {
  nlohmann::json j;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["relator"] = c.relator;
    e["status"] = c.passed ? "pass" : "fail";
    if (!c.witness.empty()) e["witness"] = c.witness;
    cs.push_back(e);
  }
  j["checks"] = cs;
  j["passed"] = passed;
  return j.dump(2) + "\n";
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Presentation p;
  bool have_gens = false;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (!have_gens) {
      if (line.rfind("gens:", 0) != 0) throw parse_error("presentation must start with 'gens: ...;'", 0);
      if (line.back() != ';') throw parse_error("gens line must end with ';'", lineno);
      std::istringstream gens(line.substr(5, line.size() - 6));
      std::vector<std::string> names;
      std::string n;
      while (gens >> n) names.push_back(n);
      p.generators = Alphabet(std::move(names));
      have_gens = true;
      continue;
    }
    Word relator = parse_relator(line, p.generators);
    p.add_relator(line, relator);
  }
  if (!have_gens) throw parse_error("empty presentation text", 0);
  return p;
}

std::string to_text(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& n : p.generators.names) out << ' ' << n;
  out << ";\n";
  for (size_t i = 0; i < p.relators.size(); ++i) out << to_string(p.relators[i], p.generators) << "\n";
  return out.str();
}

Word commutator_word(int rank, int g, int h) {
  WordBuilder b(rank);
  b.push(letter(g, +1));
  b.push(letter(h, +1));
  b.push(letter(g, -1));
  b.push(letter(h, -1));
  return b.take();
}

bool raag_check(const Presentation& p) {
  for (const Word& r : p.relators) {
    auto ls = r.letters();
    if (ls.size() != 4) return false;
    if (ls[2] != -ls[0] || ls[3] != -ls[1]) return false;
    if (letter_gen(ls[0]) == letter_gen(ls[1])) return false;
  }
  return true;
}

}  // namespace holkit
