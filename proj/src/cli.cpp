#include "symchar/cli.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symchar/character.hpp"
#include "symchar/error.hpp"
#include "symchar/group_algebra.hpp"
#include "symchar/report.hpp"
#include "symchar/representation.hpp"
#include "symchar/shifted_schur.hpp"
#include "symchar/stanley.hpp"
#include "symchar/verify.hpp"

namespace symchar::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct CommonOptions {
  bool json = false;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_flag("--json", common.json, "Emit a machine-readable JSON report");
  cmd->add_option("--threads", common.threads, "Worker threads for parallel sweeps")
      ->check(CLI::Range(1u, 256u));
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t offset = 0;
  for (const auto& item : split_commas(text)) {
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError("invalid number '" + item + "'", offset + e.position());
    }
    offset += item.size() + 1;
  }
  return out;
}

std::vector<int> parse_positive_list(const std::string& text) {
  std::vector<int> out;
  std::size_t offset = 0;
  for (const auto& item : split_commas(text)) {
    Rational r;
    try {
      r = parse_rational(item);
    } catch (const ParseError& e) {
      throw ParseError("invalid number '" + item + "'", offset + e.position());
    }
    if (r.get_den() != 1 || r < 1 || r > 1000)
      throw ParseError("expected a positive integer, got '" + item + "'", offset);
    out.push_back(static_cast<int>(r.get_num().get_si()));
    offset += item.size() + 1;
  }
  return out;
}

// Degree of mu: explicit --k, or the largest point mentioned.
Permutation parse_mu(const std::string& text, int k) {
  if (k <= 0) k = Permutation::minimal_degree(text);
  return Permutation::parse(text, k);
}

std::string join_rationals(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + to_string(values[i]);
  return out;
}

ReportCheck agreement_check(const std::string& name, const std::vector<Rational>& values,
                            const std::string& detail) {
  bool agree = true;
  for (const auto& v : values) agree = agree && v == values.front();
  ReportCheck check{name, agree ? "pass" : "fail", {}};
  if (!agree) check.counterexample = detail;
  return check;
}

int emit(RunReport report, Clock::time_point start, const CommonOptions& common,
         std::ostream& out) {
  report.duration_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  out << (common.json ? report.to_json() + "\n" : report.to_text());
  return report.all_passed() ? kExitSuccess : kExitVerificationFailure;
}

// character --nu 2,2 --mu "(1 2)" [--k K] [--method def|oo|stanley|all]
struct CharacterCommand {
  CommonOptions common;
  std::string nu;
  std::string mu = "id";
  int k = 0;
  std::string method = "def";

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("character", "Normalized character of nu at mu");
    cmd->add_option("--nu", nu, "Partition, e.g. 3,3,2")->required();
    cmd->add_option("--mu", mu, "Permutation in cycle notation, or id");
    cmd->add_option("--k", k, "Degree of mu (default: largest point of mu)");
    cmd->add_option("--method", method, "def | oo | stanley | all")
        ->check(CLI::IsMember({"def", "oo", "stanley", "all"}));
    add_common(cmd, common);
  }

  int execute(std::ostream& out) const {
    const auto start = Clock::now();
    const Partition shape = Partition::parse(nu);
    const Permutation perm = parse_mu(mu, k);
    if (perm.degree() > shape.size())
      throw DomainError("k = " + std::to_string(perm.degree()) + " exceeds n = " +
                        std::to_string(shape.size()));

    RunReport report;
    report.command = "character";
    report.inputs = {{"nu", shape.to_string()},
                     {"mu", perm.to_string()},
                     {"k", std::to_string(perm.degree())},
                     {"method", method}};
    report.outputs = {{"chi", character_at(shape, perm).get_str()},
                      {"dim", dimension(shape).get_str()}};

    std::vector<Rational> values;
    if (method == "def" || method == "all") {
      values.push_back(normalized_character(shape, perm));
      report.outputs.emplace_back("chi_hat_def", to_string(values.back()));
    }
    if (method == "oo" || method == "all") {
      values.push_back(okounkov_olshanski_character(shape, perm));
      report.outputs.emplace_back("chi_hat_oo", to_string(values.back()));
    }
    if (method == "stanley" || method == "all") {
      std::vector<int> p, q;
      decompose_pq(shape, p, q);
      std::vector<Rational> pr(p.begin(), p.end()), qr(q.begin(), q.end());
      values.push_back(stanley_rhs_numeric(perm, pr, qr, common.threads));
      report.outputs.emplace_back("chi_hat_stanley", to_string(values.back()));
    }
    if (values.size() > 1)
      report.checks.push_back(agreement_check("routes agree", values, join_rationals(values)));
    report.outputs.emplace_back("chi_hat", to_string(values.front()));
    return emit(std::move(report), start, common, out);
  }
};

// shifted-schur --lambda 2,1 --nu 3,2,1 [--method det|tableau|algebra|all]
struct ShiftedSchurCommand {
  CommonOptions common;
  std::string lambda;
  std::string nu;
  std::string method = "det";
  bool dump_element = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("shifted-schur", "Evaluate s*_lambda(nu)");
    cmd->add_option("--lambda", lambda, "Partition lambda")->required();
    cmd->add_option("--nu", nu, "Partition nu")->required();
    cmd->add_option("--method", method, "det | tableau | algebra | all")
        ->check(CLI::IsMember({"det", "tableau", "algebra", "all"}));
    cmd->add_flag("--dump-element", dump_element, "Also print the group algebra element S^k_nu");
    add_common(cmd, common);
  }

  int execute(std::ostream& out) const {
    const auto start = Clock::now();
    const Partition l = Partition::parse(lambda);
    const Partition v = Partition::parse(nu);

    RunReport report;
    report.command = "shifted-schur";
    report.inputs = {{"lambda", l.to_string()}, {"nu", v.to_string()}, {"method", method}};

    std::vector<Rational> values;
    if (method == "det" || method == "all") {
      values.push_back(shifted_schur_determinant(l, v));
      report.outputs.emplace_back("determinant", to_string(values.back()));
    }
    if (method == "tableau" || method == "all") {
      values.push_back(shifted_schur_combinatorial(l, v));
      report.outputs.emplace_back("tableau", to_string(values.back()));
    }
    if (method == "algebra" || method == "all") {
      values.push_back(shifted_schur_via_group_algebra(l, v));
      report.outputs.emplace_back("algebra", to_string(values.back()));
    }
    if (values.size() > 1)
      report.checks.push_back(agreement_check("routes agree", values, join_rationals(values)));
    if (dump_element) report.element = build_S_k_nu(l.size(), v).serialize();
    return emit(std::move(report), start, common, out);
  }
};

// stanley --mu "(1 2)(3 4)" --k 4 --p 2,1 --q 3,2 [--symbolic] [--verify]
struct StanleyCommand {
  CommonOptions common;
  std::string mu = "id";
  int k = 0;
  std::string p;
  std::string q;
  int m = 0;
  bool symbolic = false;
  bool verify = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("stanley", "Evaluate or expand the colored-permutation sum");
    cmd->add_option("--mu", mu, "Permutation in cycle notation, or id");
    cmd->add_option("--k", k, "Degree of mu (default: largest point of mu)");
    cmd->add_option("--p", p, "Comma-separated p_1..p_m");
    cmd->add_option("--q", q, "Comma-separated q_1..q_m");
    cmd->add_option("--m", m, "Number of colors for --symbolic (default: length of p, or 1)")
        ->check(CLI::Range(1, 8));
    cmd->add_flag("--symbolic", symbolic, "Print the expanded polynomial in p and q");
    cmd->add_flag("--verify", verify, "Compare with both character routes at p x q");
    add_common(cmd, common);
  }

  int execute(std::ostream& out) const {
    const auto start = Clock::now();
    const Permutation perm = parse_mu(mu, k);
    check_enumeration_cap(perm.degree());

    RunReport report;
    report.command = "stanley";
    report.inputs = {{"mu", perm.to_string()}, {"k", std::to_string(perm.degree())}};

    const bool numeric = !p.empty() || !q.empty();
    if (numeric && (p.empty() || q.empty())) throw DomainError("--p and --q must be given together");
    if (!numeric && !symbolic) throw DomainError("give --p and --q, or --symbolic");
    if (verify && !numeric) throw DomainError("--verify needs --p and --q");

    if (numeric) {
      const auto pr = parse_rational_list(p);
      const auto qr = parse_rational_list(q);
      if (pr.size() != qr.size()) throw DomainError("p and q must have the same length");
      report.inputs.emplace_back("p", join_rationals(pr));
      report.inputs.emplace_back("q", join_rationals(qr));
      if (verify) {
        const auto pv = parse_positive_list(p);
        const auto qv = parse_positive_list(q);
        const auto r = verify_main_theorem(perm, pv, qv, common.threads);
        report.outputs = {{"shape", r.shape.to_string()},
                          {"chi_hat_def", to_string(r.via_definition)},
                          {"chi_hat_oo", to_string(r.via_shifted_schur)},
                          {"stanley", to_string(r.via_stanley)}};
        report.checks.push_back(agreement_check(
            "main theorem", {r.via_definition, r.via_shifted_schur, r.via_stanley},
            join_rationals({r.via_definition, r.via_shifted_schur, r.via_stanley})));
      } else {
        report.outputs.emplace_back("stanley", to_string(stanley_rhs_numeric(perm, pr, qr, common.threads)));
      }
    }
    if (symbolic) {
      int colors = m;
      if (colors == 0) colors = numeric ? static_cast<int>(split_commas(p).size()) : 1;
      report.inputs.emplace_back("m", std::to_string(colors));
      const Polynomial poly = stanley_rhs_polynomial(perm, colors, common.threads);
      report.outputs.emplace_back(
          "polynomial", poly.to_string([&](int v) { return stanley_variable_name(v, colors); }));
    }
    return emit(std::move(report), start, common, out);
  }
};

// verify --suite NAME|all [--max-k K] [--max-n N] [--m M]
struct VerifyCommand {
  CommonOptions common;
  std::string suite = "all";
  SuiteBounds bounds;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("verify", "Run identity suites");
    std::string names = "all";
    for (const auto& n : suite_names()) names += " | " + n;
    cmd->add_option("--suite", suite, names);
    cmd->add_option("--max-k", bounds.max_k, "Largest k (default 6, refused above 9)");
    cmd->add_option("--max-n", bounds.max_n, "Largest n (default 8)")->check(CLI::Range(1, 30));
    cmd->add_option("--m", bounds.m, "Largest number of colors (default 3)")->check(CLI::Range(1, 6));
    cmd->add_option("--max-entry", bounds.max_entry, "Largest p_i, q_i for thm1 (default 3)")
        ->check(CLI::Range(1, 9));
    cmd->add_option("--max-length", bounds.max_length, "Largest length(nu) for eq8/thm8 (default 4)")
        ->check(CLI::Range(1, 12));
    cmd->add_option("--max-side", bounds.max_side, "Largest rectangle side (default 4)")
        ->check(CLI::Range(1, 9));
    cmd->add_option("--samples", bounds.samples, "Random vectors per k for lemma2 (default 20)")
        ->check(CLI::Range(1, 10000));
    cmd->add_option("--seed", bounds.seed, "Seed for lemma2");
    add_common(cmd, common);
  }

  int execute(std::ostream& out) {
    const auto start = Clock::now();
    if (bounds.max_k < 1) throw DomainError("--max-k must be positive");
    if (bounds.max_k > kHardMaxK)
      throw CapExceeded("--max-k " + std::to_string(bounds.max_k) + " refused; the hard cap is " +
                        std::to_string(kHardMaxK));
    bounds.threads = common.threads;

    RunReport report;
    report.command = "verify";
    report.inputs = {{"suite", suite},
                     {"max_k", std::to_string(bounds.max_k)},
                     {"max_n", std::to_string(bounds.max_n)},
                     {"m", std::to_string(bounds.m)},
                     {"max_entry", std::to_string(bounds.max_entry)},
                     {"max_length", std::to_string(bounds.max_length)},
                     {"max_side", std::to_string(bounds.max_side)},
                     {"samples", std::to_string(bounds.samples)},
                     {"seed", std::to_string(bounds.seed)}};
    for (const auto& r : run_suites(suite, bounds)) {
      report.outputs.emplace_back(r.name + ".cases", std::to_string(r.cases));
      report.checks.push_back({r.name, r.passed ? "pass" : "fail", r.counterexample});
    }
    return emit(std::move(report), start, common, out);
  }
};

// table --k K: character table as CSV.
struct TableCommand {
  int k = 4;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("table", "Character table of S(k) as CSV");
    cmd->add_option("--k", k, "Degree")->check(CLI::Range(1, 30));
  }

  int execute(std::ostream& out) const {
    out << CharacterTable(k).to_csv();
    return kExitSuccess;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact characters of symmetric groups and Stanley's character polynomial"};
  app.name(args.empty() ? "symchar" : args.front());
  app.require_subcommand(1);

  CharacterCommand character;
  ShiftedSchurCommand shifted;
  StanleyCommand stanley;
  VerifyCommand verify;
  TableCommand table;
  character.attach(app);
  shifted.attach(app);
  stanley.attach(app);
  verify.attach(app);
  table.attach(app);

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsageError;
  }

  try {
    if (app.got_subcommand("character")) return character.execute(out);
    if (app.got_subcommand("shifted-schur")) return shifted.execute(out);
    if (app.got_subcommand("stanley")) return stanley.execute(out);
    if (app.got_subcommand("verify")) return verify.execute(out);
    if (app.got_subcommand("table")) return table.execute(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  }
  return kExitUsageError;
}

}  // namespace symchar::cli
