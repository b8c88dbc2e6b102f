#include "holkit/expr.hpp"

#include <cctype>
#include <sstream>

#include "holkit/autf2.hpp"

namespace holkit {

namespace {

struct Token {
  enum class Kind { ident, number, lparen, rparen, star, caret, comma, equals, end };
  Kind kind;
  std::string text;
  long long value = 0;
  size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::ident, s.substr(i, j - i), 0, start});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Token t{Token::Kind::number, s.substr(i, j - i), 0, start};
      t.value = std::stoll(t.text);
      out.push_back(t);
      i = j;
    } else {
      Token::Kind k;
      switch (c) {
        case '(': k = Token::Kind::lparen; break;
        case ')': k = Token::Kind::rparen; break;
        case '*': k = Token::Kind::star; break;
        case '^': k = Token::Kind::caret; break;
        case ',': k = Token::Kind::comma; break;
        case '=': k = Token::Kind::equals; break;
        default: throw parse_error(std::string("unexpected character '") + c + "'", start);
      }
      out.push_back({k, std::string(1, c), 0, start});
      ++i;
    }
  }
  out.push_back({Token::Kind::end, "", 0, s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  ExprPtr parse_full() {
    ExprPtr e = parse_product();
    expect(Token::Kind::end, "trailing input after expression");
    return e;
  }

  // u (= v)?  ->  u v^-1
  ExprPtr parse_relator_expr() {
    ExprPtr lhs = parse_product();
    if (peek().kind == Token::Kind::equals) {
      next();
      ExprPtr rhs = parse_product();
      auto inv = std::make_shared<Expr>();
      inv->kind = Expr::Kind::pow;
      inv->args = {rhs};
      inv->exponent = -1;
      inv->pos = rhs->pos;
      auto prod = std::make_shared<Expr>();
      prod->kind = Expr::Kind::product;
      prod->args = {lhs, inv};
      prod->pos = lhs->pos;
      lhs = prod;
    }
    expect(Token::Kind::end, "trailing input after relation");
    return lhs;
  }

 private:
  const Token& peek() const { return tokens_[idx_]; }
  const Token& next() { return tokens_[idx_++]; }

  void expect(Token::Kind k, const std::string& msg) {
    if (peek().kind != k) throw parse_error(msg, peek().pos);
    next();
  }

  bool at_factor_start() const {
    auto k = peek().kind;
    return k == Token::Kind::ident || k == Token::Kind::lparen || k == Token::Kind::number;
  }

  ExprPtr parse_product() {
    std::vector<ExprPtr> factors;
    factors.push_back(parse_power());
    while (true) {
      if (peek().kind == Token::Kind::star) {
        next();
        factors.push_back(parse_power());
      } else if (at_factor_start()) {
        factors.push_back(parse_power());
      } else {
        break;
      }
    }
    if (factors.size() == 1) return factors[0];
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::product;
    e->args = std::move(factors);
    e->pos = e->args.front()->pos;
    return e;
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    while (peek().kind == Token::Kind::caret) {
      size_t pos = next().pos;
      if (peek().kind != Token::Kind::number) throw parse_error("expected integer exponent after '^'", peek().pos);
      long long k = next().value;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::pow;
      e->args = {base};
      e->exponent = k;
      e->pos = pos;
      base = e;
    }
    return base;
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::number) {
      next();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::number;
      e->number = t.value;
      e->pos = t.pos;
      return e;
    }
    if (t.kind == Token::Kind::lparen) {
      next();
      ExprPtr inner = parse_product();
      expect(Token::Kind::rparen, "expected ')'");
      return inner;
    }
    if (t.kind != Token::Kind::ident) throw parse_error("expected identifier, number or '('", t.pos);
    next();
    if (peek().kind == Token::Kind::lparen && (t.text == "inner" || t.text == "hol" || t.text == "tower")) {
      next();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::call;
      e->name = t.text;
      e->pos = t.pos;
      e->args.push_back(parse_product());
      while (peek().kind == Token::Kind::comma) {
        next();
        e->args.push_back(parse_product());
      }
      expect(Token::Kind::rparen, "expected ')' after call arguments");
      return e;
    }
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::atom;
    e->name = t.text;
    e->pos = t.pos;
    return e;
  }

  std::vector<Token> tokens_;
  size_t idx_ = 0;
};

bool needs_parens_in_power(const Expr& e) { return e.kind == Expr::Kind::product || e.kind == Expr::Kind::pow; }

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse_full(); }

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::atom: return e.name;
    case Expr::Kind::number: return std::to_string(e.number);
    case Expr::Kind::pow: {
      const Expr& base = *e.args[0];
      std::string b = print_expr(base);
      if (needs_parens_in_power(base)) b = "(" + b + ")";
      return b + "^" + std::to_string(e.exponent);
    }
    case Expr::Kind::product: {
      std::string out;
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ' ';
        const Expr& f = *e.args[i];
        std::string s = print_expr(f);
        if (f.kind == Expr::Kind::product) s = "(" + s + ")";
        out += s;
      }
      return out;
    }
    case Expr::Kind::call: {
      std::string out = e.name + "(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        out += print_expr(*e.args[i]);
      }
      return out + ")";
    }
  }
  return "";
}

Word evaluate_word(const Expr& e, const Alphabet& alphabet) {
  switch (e.kind) {
    case Expr::Kind::atom: {
      if (e.name == "e") return Word(alphabet.rank());
      auto idx = alphabet.index_of(e.name);
      if (!idx) throw parse_error("unknown generator '" + e.name + "'", e.pos);
      return generator_word(alphabet.rank(), *idx);
    }
    case Expr::Kind::product: {
      WordBuilder b(alphabet.rank());
      for (const auto& f : e.args) b.append(evaluate_word(*f, alphabet));
      return b.take();
    }
    case Expr::Kind::pow: return power(evaluate_word(*e.args[0], alphabet), e.exponent);
    default: throw parse_error("expected a word expression", e.pos);
  }
}

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  return evaluate_word(*parse_expr(text), alphabet);
}

Word parse_relator(const std::string& text, const Alphabet& alphabet) {
  return evaluate_word(*Parser(text).parse_relator_expr(), alphabet);
}

std::string value_kind(const Value& v) {
  switch (v.index()) {
    case 0: return "word";
    case 1: return "automorphism";
    case 2: return "hol";
    default: return "tower";
  }
}

std::string to_string(const Value& v) {
  if (const Word* w = std::get_if<Word>(&v)) {
    return to_string(*w, w->rank() == 2 ? Alphabet::ab() : Alphabet::numbered(std::max(w->rank(), 1)));
  }
  if (const Automorphism* a = std::get_if<Automorphism>(&v)) return to_string(*a, Alphabet::ab());
  if (const HolElement* h = std::get_if<HolElement>(&v)) return to_string(*h, Alphabet::ab());
  return to_string(std::get<TowerElement>(v));
}

namespace {

bool is_aut_name(const std::string& n) {
  return n == "p" || n == "x" || n == "y" || n == "ta" || n == "tb" || n == "t1" || n == "id";
}

bool is_numbered_name(const std::string& n) {
  if (n.size() < 2 || n[0] != 'x') return false;
  for (size_t i = 1; i < n.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(n[i]))) return false;
  return true;
}

// Collects atom names to infer whether a subtree is a word and over which
// alphabet; aut/hol/tower factors make it a non-word.
void collect_atoms(const Expr& e, std::vector<const Expr*>& atoms, bool& has_call) {
  switch (e.kind) {
    case Expr::Kind::atom: atoms.push_back(&e); break;
    case Expr::Kind::number: atoms.push_back(&e); break;
    case Expr::Kind::call: has_call = true; break;
    case Expr::Kind::pow: collect_atoms(*e.args[0], atoms, has_call); break;
    case Expr::Kind::product:
      for (const auto& f : e.args) collect_atoms(*f, atoms, has_call);
      break;
  }
}

Alphabet infer_word_alphabet(const Expr& e) {
  std::vector<const Expr*> atoms;
  bool has_call = false;
  collect_atoms(e, atoms, has_call);
  if (has_call) throw parse_error("expected a word expression", e.pos);
  int max_numbered = 0;
  bool has_ab = false;
  for (const Expr* a : atoms) {
    if (a->kind == Expr::Kind::number) throw parse_error("number is not a word", a->pos);
    if (a->name == "a" || a->name == "b")
      has_ab = true;
    else if (is_numbered_name(a->name))
      max_numbered = std::max(max_numbered, std::stoi(a->name.substr(1)));
    else if (a->name != "e")
      throw parse_error("unknown word generator '" + a->name + "'", a->pos);
  }
  if (has_ab && max_numbered > 0) throw parse_error("cannot mix a,b with x1..xn generators", e.pos);
  if (max_numbered > 0) return Alphabet::numbered(max_numbered);
  return Alphabet::ab();
}

Value combine_product(const Value& acc, const Value& v, size_t pos) {
  if (acc.index() != v.index())
    throw parse_error("type mismatch: cannot multiply " + value_kind(acc) + " by " + value_kind(v), pos);
  if (const Word* w = std::get_if<Word>(&acc)) {
    const Word& rhs = std::get<Word>(v);
    if (w->rank() != rhs.rank()) {
      int r = std::max(w->rank(), rhs.rank());
      return multiply(w->promoted(r), rhs.promoted(r));
    }
    return multiply(*w, rhs);
  }
  if (const Automorphism* a = std::get_if<Automorphism>(&acc)) return compose(*a, std::get<Automorphism>(v));
  if (const HolElement* h = std::get_if<HolElement>(&acc)) return hol_multiply(*h, std::get<HolElement>(v));
  return tower_multiply(std::get<TowerElement>(acc), std::get<TowerElement>(v));
}

Value value_power(const Value& v, long long k) {
  if (const Word* w = std::get_if<Word>(&v)) return power(*w, k);
  if (const Automorphism* a = std::get_if<Automorphism>(&v)) return power(*a, k);
  if (const HolElement* h = std::get_if<HolElement>(&v)) return group_pow(*h, k);
  return group_pow(std::get<TowerElement>(v), k);
}

bool subtree_is_aut(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::atom: return is_aut_name(e.name) || e.name == "inner";
    case Expr::Kind::number: return false;
    case Expr::Kind::call: return e.name == "inner";
    case Expr::Kind::pow: return subtree_is_aut(*e.args[0]);
    case Expr::Kind::product:
      for (const auto& f : e.args)
        if (!subtree_is_aut(*f)) return false;
      return true;
  }
  return false;
}

}  // namespace

Value evaluate_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number: throw parse_error("bare number is not a group element", e.pos);
    case Expr::Kind::atom: {
      if (is_aut_name(e.name)) return autf2_constant(e.name);
      Alphabet alphabet = infer_word_alphabet(e);
      return evaluate_word(e, alphabet);
    }
    case Expr::Kind::call: {
      if (e.name == "inner") {
        if (e.args.size() != 1) throw parse_error("inner(w) takes one argument", e.pos);
        Word w = evaluate_word(*e.args[0], infer_word_alphabet(*e.args[0]));
        return inner(w);
      }
      if (e.name == "hol") {
        if (e.args.size() != 2) throw parse_error("hol(word, aut) takes two arguments", e.pos);
        Word w = evaluate_word(*e.args[0], Alphabet::ab());
        Value a = evaluate_expr(*e.args[1]);
        if (!std::holds_alternative<Automorphism>(a))
          throw parse_error("hol(word, aut): second argument must be an automorphism", e.args[1]->pos);
        return HolElement(w, std::get<Automorphism>(a));
      }
      if (e.name == "tower") {
        if (e.args.size() != 3) throw parse_error("tower(n, word, lower) takes three arguments", e.pos);
        if (e.args[0]->kind != Expr::Kind::number) throw parse_error("tower level must be an integer", e.args[0]->pos);
        int level = static_cast<int>(e.args[0]->number);
        if (level < 1) throw parse_error("tower level must be >= 1", e.args[0]->pos);
        // The base free part is an F_2 word, spelled a, b or x1, x2.
        Word w = level == 1 ? evaluate_word(*e.args[1], infer_word_alphabet(*e.args[1])).promoted(2)
                            : evaluate_word(*e.args[1], Alphabet::numbered(level + 1));
        Value lower = evaluate_expr(*e.args[2]);
        if (level == 1) {
          if (!std::holds_alternative<Automorphism>(lower))
            throw parse_error("tower(1, word, aut): lower part must be an automorphism", e.args[2]->pos);
          return TowerElement::base(HolElement(w, std::get<Automorphism>(lower)));
        }
        if (std::holds_alternative<HolElement>(lower)) {
          const HolElement& h = std::get<HolElement>(lower);
          lower = TowerElement::base(h);
        }
        if (!std::holds_alternative<TowerElement>(lower))
          throw parse_error("tower lower part must be a tower or hol element", e.args[2]->pos);
        const TowerElement& lo = std::get<TowerElement>(lower);
        if (lo.level() != level - 1)
          throw parse_error("tower lower part has level " + std::to_string(lo.level()) + ", expected " + std::to_string(level - 1),
                            e.args[2]->pos);
        return TowerElement::make(w, lo);
      }
      throw parse_error("unknown function '" + e.name + "'", e.pos);
    }
    case Expr::Kind::pow: return value_power(evaluate_expr(*e.args[0]), e.exponent);
    case Expr::Kind::product: {
      // A product of plain names is a word unless every factor is an
      // automorphism constant; mixed products are a type error.
      bool all_aut = subtree_is_aut(e);
      bool any_call = false;
      std::vector<const Expr*> atoms;
      collect_atoms(e, atoms, any_call);
      if (!all_aut && !any_call) {
        bool word_like = true;
        for (const Expr* a : atoms) {
          if (a->kind == Expr::Kind::number) word_like = false;
          else if (a->name != "e" && a->name != "a" && a->name != "b" && !is_numbered_name(a->name)) word_like = false;
        }
        if (word_like) return evaluate_word(e, infer_word_alphabet(e));
      }
      Value acc = evaluate_expr(*e.args[0]);
      for (size_t i = 1; i < e.args.size(); ++i) acc = combine_product(acc, evaluate_expr(*e.args[i]), e.args[i]->pos);
      return acc;
    }
  }
  throw parse_error("unreachable expression kind", e.pos);
}

Value evaluate_expr(const std::string& text) { return evaluate_expr(*parse_expr(text)); }

}  // namespace holkit
