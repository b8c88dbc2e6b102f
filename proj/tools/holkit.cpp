// holkit command line: expression evaluation, normal forms, GL2 projection,
// ball enumeration, element orders and the verification suites.
//
// Exit codes: 0 success / all checks passed, 1 check failure, 2 usage or
// parse error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "holkit/autf2.hpp"
#include "holkit/expr.hpp"
#include "holkit/verify.hpp"
#include "json.hpp"

namespace {

using namespace holkit;

struct CommonOpts {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

int cmd_nf(const std::string& expr_text, const CommonOpts& opts) {
  Value v = evaluate_expr(expr_text);
  if (!std::holds_alternative<Automorphism>(v)) {
    std::cerr << "nf expects an automorphism expression, got " << value_kind(v) << "\n";
    return 2;
  }
  NormalForm nf = normal_form(std::get<Automorphism>(v));
  if (opts.json()) {
    nlohmann::json j;
    j["r"] = nf.r;
    j["s"] = nf.s;
    j["u"] = to_string(nf.u, Alphabet({"x", "y"}));
    j["w"] = to_string(nf.w, Alphabet({"ta", "tb"}));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(nf) << "\n";
  }
  return 0;
}

nlohmann::json aut_to_json(const Automorphism& a) {
  Alphabet names = a.rank() == 2 ? Alphabet::ab() : Alphabet::numbered(a.rank());
  nlohmann::json j;
  for (int g = 0; g < a.rank(); ++g) j[names.name(g)] = to_string(a.image(g), names);
  return j;
}

nlohmann::json tower_to_json(const TowerElement& t) {
  nlohmann::json j;
  j["level"] = t.level();
  j["free"] = to_string(t.free_part(), t.level() == 1 ? Alphabet::ab() : Alphabet::numbered(t.rank()));
  if (t.is_base())
    j["aut"] = aut_to_json(t.base_aut());
  else
    j["lower"] = tower_to_json(t.lower());
  return j;
}

nlohmann::json value_to_json(const Value& v) {
  nlohmann::json j;
  j["kind"] = value_kind(v);
  if (const Word* w = std::get_if<Word>(&v)) {
    j["value"] = to_string(*w, w->rank() == 2 ? Alphabet::ab() : Alphabet::numbered(std::max(w->rank(), 1)));
  } else if (const Automorphism* a = std::get_if<Automorphism>(&v)) {
    j["value"] = aut_to_json(*a);
  } else if (const HolElement* h = std::get_if<HolElement>(&v)) {
    nlohmann::json e;
    e["free"] = to_string(h->free_part, Alphabet::ab());
    e["aut"] = aut_to_json(h->aut_part);
    j["value"] = e;
  } else {
    j["value"] = tower_to_json(std::get<TowerElement>(v));
  }
  return j;
}

int cmd_eval(const std::string& expr_text, const CommonOpts& opts) {
  Value v = evaluate_expr(expr_text);
  if (opts.json())
    std::cout << value_to_json(v).dump(2) << "\n";
  else
    std::cout << to_string(v) << "\n";
  return 0;
}

int cmd_mul(const std::vector<std::string>& exprs, const CommonOpts& opts) {
  std::string joined;
  for (size_t i = 0; i < exprs.size(); ++i) {
    if (i) joined += " ";
    joined += "(" + exprs[i] + ")";
  }
  return cmd_eval(joined, opts);
}

int cmd_invert(const std::string& expr_text, const CommonOpts& opts) {
  return cmd_eval("(" + expr_text + ")^-1", opts);
}

int cmd_project(const std::string& expr_text, const CommonOpts& opts) {
  Value v = evaluate_expr(expr_text);
  if (!std::holds_alternative<Automorphism>(v)) {
    std::cerr << "project expects an automorphism expression, got " << value_kind(v) << "\n";
    return 2;
  }
  Gl2Element m = project_gl2(std::get<Automorphism>(v));
  if (opts.json()) {
    nlohmann::json j;
    j["matrix"] = {{m.mat.at(0, 0), m.mat.at(0, 1)}, {m.mat.at(1, 0), m.mat.at(1, 1)}};
    j["det"] = m.mat.det();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << m.mat.str() << "\n";
  }
  return 0;
}

int cmd_order(const std::string& expr_text, long long cap, const CommonOpts& opts) {
  Value v = evaluate_expr(expr_text);
  OrderResult r;
  if (const Automorphism* a = std::get_if<Automorphism>(&v))
    r = order_of(*a, cap);
  else if (const Word* w = std::get_if<Word>(&v))
    r = order_of(*w, cap);
  else if (const HolElement* h = std::get_if<HolElement>(&v))
    r = order_of(*h, cap);
  else
    r = order_of(std::get<TowerElement>(v), cap);
  if (opts.json()) {
    nlohmann::json j;
    j["cap"] = cap;
    j["finite"] = r.finite;
    if (r.finite) j["order"] = r.order;
    std::cout << j.dump(2) << "\n";
  } else {
    if (r.finite)
      std::cout << r.order << "\n";
    else
      std::cout << "infinite (beyond cap " << cap << ")\n";
  }
  return 0;
}

int cmd_ball(const std::string& gens_text, int radius, size_t cap, const CommonOpts& opts) {
  std::vector<Automorphism> gens;
  std::vector<std::string> names;
  size_t start = 0;
  while (start <= gens_text.size()) {
    size_t comma = gens_text.find(',', start);
    std::string piece = gens_text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!piece.empty()) {
      Value v = evaluate_expr(piece);
      if (!std::holds_alternative<Automorphism>(v)) {
        std::cerr << "ball generators must be automorphism expressions, got " << value_kind(v) << "\n";
        return 2;
      }
      gens.push_back(std::get<Automorphism>(v));
      names.push_back(piece);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (gens.empty()) {
    std::cerr << "ball needs at least one generator\n";
    return 2;
  }
  std::vector<Automorphism> ball = enumerate_ball(gens, radius, cap ? cap : default_ball_cap());
  if (opts.json()) {
    nlohmann::json j;
    j["gens"] = names;
    j["radius"] = radius;
    j["size"] = ball.size();
    if (ball.size() <= 128) {
      nlohmann::json elems = nlohmann::json::array();
      for (const auto& e : ball) elems.push_back(to_string(e, Alphabet::ab()));
      j["elements"] = elems;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "ball size: " << ball.size() << "\n";
    if (ball.size() <= 32)
      for (const auto& e : ball) std::cout << "  " << to_string(e, Alphabet::ab()) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteParams& params, const CommonOpts& opts) {
  std::vector<std::string> to_run;
  if (suite == "all")
    to_run = suite_names();
  else
    to_run.push_back(suite);
  bool all_passed = true;
  for (const auto& name : to_run) {
    SuiteReport report = run_suite(name, params);
    all_passed = all_passed && report.passed;
    if (opts.json())
      std::cout << report.to_json(true);
    else
      std::cout << report.to_text();
  }
  return all_passed ? 0 : 1;
}

int cmd_dump_fixtures(const std::string& dir) {
  auto write = [&](const std::string& name, const std::string& text) {
    std::string path = dir.empty() ? name : dir + "/" + name;
    std::ofstream out(path);
    if (!out) throw error("cannot write " + path);
    out << text;
    std::cout << "wrote " << path << "\n";
  };
  write("autf2.pres", to_text(autf2_presentation()));
  write("gl2.pres", to_text(gl2_presentation()));
  {
    Presentation fp;
    fp.generators = Alphabet({"a1", "a2", "a3", "f1", "f2"});
    for (const char* rel : {"f1 a1 f1^-1 = a1", "f1 a2 f1^-1 = a2", "f2 a1 f2^-1 = a1", "f2 a2 f2^-1 = a2",
                            "f1 a3 f1^-1 = a3 a1", "f2 a3 f2^-1 = a3 a2"})
      fp.add_relator(rel, parse_relator(rel, fp.generators));
    write("fp.pres", to_text(fp));
  }
  const int signs[4][2] = {{+1, +1}, {-1, +1}, {+1, -1}, {-1, -1}};
  for (int case_no = 1; case_no <= 4; ++case_no) {
    Presentation p;
    p.generators = Alphabet({"t1", "t2", "x1", "x2"});
    int e1 = signs[case_no - 1][0], e2 = signs[case_no - 1][1];
    for (std::string rel : {std::string("t1 x1 t1^-1 = x1^-1"), std::string("t1 x2 t1^-1 = x2"), std::string("t1^2"),
                            std::string("t1 t2 t1^-1 = t2"),
                            "t2 x1 t2^-1 = x2 x1^" + std::to_string(e1) + " x2^-1",
                            "t2 x2 t2^-1 = x2^" + std::to_string(e2)})
      p.add_relator(rel, parse_relator(rel, p.generators));
    write("appendix_case" + std::to_string(case_no) + "_k1.pres", to_text(p));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holkit: exact computation in free groups, Aut(F2), holomorphs and iterated split extensions"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string expr_text;
  std::vector<std::string> mul_exprs;
  std::string gens_text = "p,x,y,ta,tb";
  long long cap = 64;
  SuiteParams params;
  std::string suite_name;
  std::string dump_dir;
  int radius = 6;
  size_t ball_cap = 0;
  std::string k_list;

  auto add_format = [&](CLI::App* cmd) { cmd->add_option("--format", opts.format, "text or json")->check(CLI::IsMember({"text", "json"})); };

  CLI::App* nf = app.add_subcommand("nf", "normal form p^r u x^2s w of an automorphism");
  nf->add_option("expr", expr_text, "automorphism expression")->required();
  add_format(nf);

  CLI::App* eval = app.add_subcommand("eval", "evaluate an expression");
  eval->add_option("expr", expr_text, "expression");
  eval->add_flag("--dump-fixtures", "write the embedded presentation fixtures as text files");
  eval->add_option("--dir", dump_dir, "directory for --dump-fixtures");
  add_format(eval);

  CLI::App* mul = app.add_subcommand("mul", "multiply expressions");
  mul->add_option("exprs", mul_exprs, "expressions")->required()->expected(-2);
  add_format(mul);

  CLI::App* inv = app.add_subcommand("invert", "invert an expression");
  inv->add_option("expr", expr_text, "expression")->required();
  add_format(inv);

  CLI::App* project = app.add_subcommand("project", "project an automorphism to GL2(Z)");
  project->add_option("expr", expr_text, "automorphism expression")->required();
  add_format(project);

  CLI::App* order = app.add_subcommand("order", "order of an element up to a cap");
  order->add_option("expr", expr_text, "expression")->required();
  order->add_option("--cap", cap, "iteration cap")->check(CLI::PositiveNumber);
  add_format(order);

  CLI::App* ball = app.add_subcommand("ball", "enumerate a ball in Aut(F2)");
  ball->add_option("--gens", gens_text, "comma-separated automorphism expressions");
  ball->add_option("--radius", radius, "ball radius")->check(CLI::NonNegativeNumber);
  ball->add_option("--cap", ball_cap, "element cap (default HOLKIT_MAX_BALL or 10^6)");
  add_format(ball);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite (or 'all')");
  verify->add_option("suite", suite_name, "suite name")->required();
  verify->add_option("--radius", params.radius, "ball radius / word length bound");
  verify->add_option("--n", params.level, "tower level bound");
  verify->add_option("--k", k_list, "comma-separated exponent set, e.g. 1,-1,2,-2");
  verify->add_option("--samples", params.samples, "random samples per configuration");
  verify->add_option("--seed", params.seed, "random seed");
  verify->add_option("--cap", params.cap, "ball element cap");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (nf->parsed()) return cmd_nf(expr_text, opts);
    if (eval->parsed()) {
      if (eval->count("--dump-fixtures")) return cmd_dump_fixtures(dump_dir);
      if (expr_text.empty()) {
        std::cerr << "eval needs an expression or --dump-fixtures\n";
        return 2;
      }
      return cmd_eval(expr_text, opts);
    }
    if (mul->parsed()) return cmd_mul(mul_exprs, opts);
    if (inv->parsed()) return cmd_invert(expr_text, opts);
    if (project->parsed()) return cmd_project(expr_text, opts);
    if (order->parsed()) return cmd_order(expr_text, cap, opts);
    if (ball->parsed()) return cmd_ball(gens_text, radius, ball_cap, opts);
    if (verify->parsed()) {
      if (!k_list.empty()) {
        params.k_values.clear();
        size_t start = 0;
        while (start <= k_list.size()) {
          size_t comma = k_list.find(',', start);
          std::string piece = k_list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
          if (!piece.empty()) params.k_values.push_back(std::stoi(piece));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      }
      return cmd_verify(suite_name, params, opts);
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
