#include "symchar/verify.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "symchar/character.hpp"
#include "symchar/error.hpp"
#include "symchar/group_algebra.hpp"
#include "symchar/parallel.hpp"
#include "symchar/representation.hpp"
#include "symchar/shifted_schur.hpp"
#include "symchar/stanley.hpp"

namespace symchar {

namespace {

using Outcome = std::optional<std::string>;

// Runs every case, possibly in parallel, and keeps the first failure in case
// order so that reports do not depend on the worker count.
template <class Case>
CheckResult sweep(std::string name, const std::vector<Case>& cases, unsigned threads,
                  const std::function<Outcome(const Case&)>& check) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result;
  result.name = std::move(name);
  result.cases = cases.size();
  const auto outcomes =
      parallel_map<Outcome>(cases.size(), threads, [&](std::size_t i) { return check(cases[i]); });
  for (const auto& o : outcomes)
    if (o) {
      result.passed = false;
      result.counterexample = *o;
      break;
    }
  result.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string join(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(values[i]);
  }
  return out + ")";
}

std::string join(const std::vector<int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions_up_to(int max_k) {
  std::vector<Partition> out;
  for (int k = 1; k <= max_k; ++k)
    for (auto& p : partitions_of(k)) out.push_back(std::move(p));
  return out;
}

CheckResult lemma2(const SuiteBounds& b) {
  struct Case {
    std::vector<Rational> x;
  };
  std::mt19937_64 rng(b.seed);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<Case> cases;
  for (int k = 1; k <= b.max_k; ++k)
    for (int s = 0; s < b.samples; ++s) {
      Case c;
      for (int j = 0; j < k; ++j) c.x.push_back(make_rational(num(rng), den(rng)));
      cases.push_back(std::move(c));
    }
  return sweep<Case>("lemma2", cases, b.threads, [](const Case& c) -> Outcome {
    const int k = static_cast<int>(c.x.size());
    if (jm_factored_product(c.x, k) == jm_combinatorial_expansion(c.x, k)) return std::nullopt;
    return "k=" + std::to_string(k) + " X=" + join(c.x);
  });
}

CheckResult lemma3(const SuiteBounds& b) {
  return sweep<Partition>("lemma3", partitions_up_to(b.max_k), b.threads,
                          [](const Partition& lambda) -> Outcome {
    const int k = lambda.size();
    const auto rep = build_seminormal(lambda);
    for (int i = 1; i <= k; ++i) {
      const RationalMatrix jm = rep.matrix_of(jucys_murphy(i, k));
      if (!jm.is_diagonal()) return "lambda=" + lambda.to_string() + " J_" + std::to_string(i) + " not diagonal";
      for (std::size_t t = 0; t < rep.dimension(); ++t)
        if (jm(t, t) != rep.basis()[t].content(i))
          return "lambda=" + lambda.to_string() + " J_" + std::to_string(i) + " T=" +
                 rep.basis()[t].to_string() + " eigenvalue " + to_string(jm(t, t)) +
                 " != content " + std::to_string(rep.basis()[t].content(i));
    }
    return std::nullopt;
  });
}

CheckResult eq3(const SuiteBounds& b) {
  struct Case {
    Partition lambda;
    bool trace_check;
  };
  std::vector<Case> cases;
  for (auto& lambda : partitions_up_to(std::max(b.max_k, b.max_n)))
    cases.push_back({lambda, lambda.size() <= b.max_k});
  auto result = sweep<Case>("eq3", cases, b.threads, [](const Case& c) -> Outcome {
    const auto& lambda = c.lambda;
    const auto tableaux = enumerate_standard_tableaux(lambda);
    if (Integer(static_cast<long>(tableaux.size())) != hook_length_dimension(lambda))
      return "lambda=" + lambda.to_string() + " tableau count " + std::to_string(tableaux.size()) +
             " != hook length " + hook_length_dimension(lambda).get_str();
    if (!c.trace_check) return std::nullopt;
    const auto rep = build_seminormal(lambda);
    Outcome failure;
    for_each_permutation(lambda.size(), [&](const Permutation& sigma) {
      if (failure) return;
      const Rational trace = rep.character(sigma);
      const Integer oracle = character_oracle(lambda, sigma.cycle_type());
      if (trace != oracle)
        failure = "lambda=" + lambda.to_string() + " sigma=" + sigma.to_string() + " trace " +
                  to_string(trace) + " != oracle " + oracle.get_str();
    });
    return failure;
  });
  if (result.passed) {
    for (int k = 1; k <= std::max(b.max_k, b.max_n); ++k) {
      Integer sum = 0;
      for (const auto& lambda : partitions_of(k)) sum += dimension(lambda) * dimension(lambda);
      ++result.cases;
      if (sum != factorial(k)) {
        result.passed = false;
        result.counterexample = "k=" + std::to_string(k) + " sum dim^2 = " + sum.get_str();
        break;
      }
    }
  }
  return result;
}

struct ShapePair {
  Partition lambda;
  Partition nu;
};

std::vector<ShapePair> shape_pairs(const SuiteBounds& b, bool need_n_ge_k) {
  std::vector<ShapePair> out;
  for (const auto& lambda : partitions_up_to(b.max_k))
    for (const auto& nu : partitions_up_to(b.max_n)) {
      if (nu.length() > b.max_length) continue;
      if (need_n_ge_k && nu.size() < lambda.size()) continue;
      out.push_back({lambda, nu});
    }
  return out;
}

CheckResult eq8(const SuiteBounds& b) {
  return sweep<ShapePair>("eq8", shape_pairs(b, false), b.threads, [](const ShapePair& c) -> Outcome {
    const Rational det = shifted_schur_determinant(c.lambda, c.nu);
    const Rational tab = shifted_schur_combinatorial(c.lambda, c.nu);
    if (det == tab) return std::nullopt;
    return "lambda=" + c.lambda.to_string() + " nu=" + c.nu.to_string() + " determinant " +
           to_string(det) + " != tableau sum " + to_string(tab);
  });
}

CheckResult thm8(const SuiteBounds& b) {
  // S^k_nu depends on (k, nu) only, so it is built once per pair and
  // evaluated against every lambda of k.
  struct Case {
    int k;
    Partition nu;
  };
  std::vector<Case> cases;
  for (int k = 1; k <= b.max_k; ++k)
    for (const auto& nu : partitions_up_to(b.max_n))
      if (nu.length() <= b.max_length && nu.size() >= k) cases.push_back({k, nu});
  auto result = sweep<Case>("thm8", cases, b.threads, [](const Case& c) -> Outcome {
    const GroupAlgebraElement element = build_S_k_nu(c.k, c.nu);
    for (const auto& lambda : partitions_of(c.k)) {
      const Rational det = shifted_schur_determinant(lambda, c.nu);
      const Rational alg = character_of_element(lambda, element);
      if (det != alg)
        return "lambda=" + lambda.to_string() + " nu=" + c.nu.to_string() + " determinant " +
               to_string(det) + " != chi(S^k_nu) " + to_string(alg);
    }
    return std::nullopt;
  });
  return result;
}

CheckResult thm6(const SuiteBounds& b) {
  struct Case {
    Permutation mu;
    Partition nu;
  };
  std::vector<Case> cases;
  for (int k = 1; k <= b.max_k; ++k)
    for (const auto& mu : cycle_type_representatives(k))
      for (int n = k; n <= b.max_n; ++n)
        for (const auto& nu : partitions_of(n)) cases.push_back({mu, nu});
  return sweep<Case>("thm6", cases, b.threads, [](const Case& c) -> Outcome {
    const Rational oo = okounkov_olshanski_character(c.nu, c.mu);
    const Rational def = normalized_character(c.nu, c.mu);
    if (oo == def) return std::nullopt;
    return "nu=" + c.nu.to_string() + " mu=" + c.mu.to_string() + " k=" +
           std::to_string(c.mu.degree()) + " shifted Schur sum " + to_string(oo) +
           " != normalized character " + to_string(def);
  });
}

// All sequences of length m with entries in 1..max_entry; weakly decreasing
// ones only when `decreasing`.
std::vector<std::vector<int>> sequences(int m, int max_entry, bool decreasing) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void()> rec = [&] {
    if (static_cast<int>(current.size()) == m) {
      out.push_back(current);
      return;
    }
    const int top = decreasing && !current.empty() ? current.back() : max_entry;
    for (int v = 1; v <= top; ++v) {
      current.push_back(v);
      rec();
      current.pop_back();
    }
  };
  rec();
  return out;
}

CheckResult thm1(const SuiteBounds& b) {
  struct Case {
    Permutation mu;
    std::vector<int> p, q;
  };
  std::vector<Case> cases;
  for (int k = 1; k <= b.max_k; ++k)
    for (const auto& mu : cycle_type_representatives(k))
      for (int m = 1; m <= b.m; ++m)
        for (const auto& p : sequences(m, b.max_entry, false))
          for (const auto& q : sequences(m, b.max_entry, true)) {
            int n = 0;
            for (int j = 0; j < m; ++j) n += p[j] * q[j];
            if (n >= k) cases.push_back({mu, p, q});
          }
  return sweep<Case>("thm1", cases, b.threads, [](const Case& c) -> Outcome {
    const auto r = verify_main_theorem(c.mu, c.p, c.q);
    if (r.agree) return std::nullopt;
    return "mu=" + c.mu.to_string() + " k=" + std::to_string(c.mu.degree()) + " p=" + join(c.p) +
           " q=" + join(c.q) + " definition " + to_string(r.via_definition) + ", shifted Schur " +
           to_string(r.via_shifted_schur) + ", Stanley " + to_string(r.via_stanley);
  });
}

CheckResult eq11(const SuiteBounds& b) {
  std::vector<int> ks;
  for (int k = 1; k <= b.max_k; ++k) ks.push_back(k);
  return sweep<int>("eq11", ks, b.threads, [](const int& k) -> Outcome {
    const auto r = second_orthogonality_check(k);
    if (r.passed) return std::nullopt;
    return "k=" + std::to_string(k) + " " + *r.counterexample;
  });
}

CheckResult functional_eq(const SuiteBounds& b) {
  struct Case {
    Permutation mu;
    int m;
    int i;
  };
  std::vector<Case> cases;
  for (int k = 1; k <= b.max_k; ++k)
    for (const auto& mu : all_permutations(k))
      for (int m = 2; m <= b.m; ++m)
        for (int i = 1; i < m; ++i) cases.push_back({mu, m, i});
  return sweep<Case>("functional-eq", cases, b.threads, [](const Case& c) -> Outcome {
    const auto r = verify_functional_equation(c.mu, c.m, c.i);
    if (r.passed) return std::nullopt;
    auto name = [&](int v) { return stanley_variable_name(v, c.m); };
    return "mu=" + c.mu.to_string() + " k=" + std::to_string(c.mu.degree()) + " m=" +
           std::to_string(c.m) + " i=" + std::to_string(c.i) + " restricted " +
           r.restricted.to_string(name) + " != merged " + r.merged.to_string(name);
  });
}

CheckResult dimension_identity(const SuiteBounds& b) {
  return sweep<Partition>("dimension-identity", partitions_up_to(b.max_k), b.threads,
                          [](const Partition& lambda) -> Outcome {
    const auto r = dimension_content_identity_check(lambda);
    if (r.passed) return std::nullopt;
    std::string lhs, rhs;
    for (const auto& c : r.lhs) lhs += c.get_str() + " ";
    for (const auto& c : r.rhs) rhs += c.get_str() + " ";
    return "lambda=" + lambda.to_string() + " coefficients " + lhs + "!= " + rhs;
  });
}

CheckResult rectangle(const SuiteBounds& b) {
  struct Case {
    Permutation mu;
    int p, q;
  };
  std::vector<Case> cases;
  for (int k = 1; k <= b.max_k; ++k)
    for (const auto& mu : cycle_type_representatives(k))
      for (int p = 1; p <= b.max_side; ++p)
        for (int q = 1; q <= b.max_side; ++q)
          if (p * q >= k) cases.push_back({mu, p, q});
  return sweep<Case>("rectangle", cases, b.threads, [](const Case& c) -> Outcome {
    const std::vector<Rational> p{c.p}, q{c.q};
    const Rational rhs = stanley_rhs_numeric(c.mu, p, q);
    const std::vector<int> pv{c.p}, qv{c.q};
    const Rational lhs = normalized_character(build_pq_partition(pv, qv), c.mu);
    const std::string where = "mu=" + c.mu.to_string() + " k=" + std::to_string(c.mu.degree()) +
                              " p=" + std::to_string(c.p) + " q=" + std::to_string(c.q);
    if (lhs != rhs)
      return where + " normalized character " + to_string(lhs) + " != Stanley " + to_string(rhs);
    if (c.mu.degree() == 2 && !c.mu.is_identity()) {
      const Rational closed = Rational(c.p * c.q * (c.q - c.p));
      if (rhs != closed) return where + " transposition value " + to_string(rhs) + " != pq(q-p) " + to_string(closed);
    }
    return std::nullopt;
  });
}

using SuiteFn = CheckResult (*)(const SuiteBounds&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"lemma2", lemma2},
      {"lemma3", lemma3},
      {"eq3", eq3},
      {"eq8", eq8},
      {"eq11", eq11},
      {"thm6", thm6},
      {"thm8", thm8},
      {"thm1", thm1},
      {"functional-eq", functional_eq},
      {"dimension-identity", dimension_identity},
      {"rectangle", rectangle},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

CheckResult run_suite(std::string_view name, const SuiteBounds& bounds) {
  for (const auto& [suite, fn] : registry())
    if (suite == name) return fn(bounds);
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::vector<CheckResult> run_suites(std::string_view name, const SuiteBounds& bounds) {
  std::vector<CheckResult> out;
  if (name == "all") {
    for (const auto& [suite, fn] : registry()) out.push_back(fn(bounds));
  } else {
    out.push_back(run_suite(name, bounds));
  }
  return out;
}

}  // namespace symchar
