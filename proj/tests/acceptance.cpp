// Runs each acceptance criterion at its stated bounds and prints one line per
// criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "symchar/verify.hpp"

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> suites;
  symchar::SuiteBounds bounds;
  double budget_s;
};

symchar::SuiteBounds bounds(int max_k, int max_n, int m) {
  symchar::SuiteBounds b;
  b.max_k = max_k;
  b.max_n = max_n;
  b.m = m;
  return b;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  auto c1 = bounds(5, 8, 2);
  c1.max_entry = 3;
  criteria.push_back({1, "colored-permutation formula equals both character routes", {"thm1"}, c1, 300});

  auto c2 = bounds(6, 8, 3);
  c2.samples = 20;
  criteria.push_back({2, "Jucys-Murphy product expansion", {"lemma2"}, c2, 60});

  criteria.push_back({3, "Jucys-Murphy elements act diagonally by contents", {"lemma3"}, bounds(6, 8, 3), 60});
  criteria.push_back({4, "shifted Schur expansion of normalized characters", {"thm6"}, bounds(4, 7, 3), 120});

  auto c5 = bounds(4, 6, 3);
  c5.max_length = 4;
  criteria.push_back({5, "determinant = tableau sum = trace of the group algebra element", {"eq8", "thm8"}, c5, 180});

  criteria.push_back({6, "second orthogonality relation", {"eq11"}, bounds(6, 8, 3), 30});
  criteria.push_back({7, "dimension-content polynomial identity", {"dimension-identity"}, bounds(5, 8, 3), 30});
  criteria.push_back({8, "functional equation in p and q", {"functional-eq"}, bounds(4, 8, 3), 120});

  auto c9 = bounds(5, 8, 1);
  c9.max_side = 4;
  criteria.push_back({9, "single-rectangle specialization", {"rectangle"}, c9, 60});

  criteria.push_back({10, "seminormal traces match Murnaghan-Nakayama; sum of dim^2 = k!", {"eq3"}, bounds(5, 8, 3), 60});

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;
    for (const auto& suite : c.suites) {
      const auto r = symchar::run_suite(suite, c.bounds);
      cases += r.cases;
      if (!r.passed) {
        passed = false;
        if (detail.empty()) detail = suite + ": " + r.counterexample.value_or("(no counterexample)");
      }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_s) {
      passed = false;
      if (detail.empty()) detail = "exceeded time budget of " + std::to_string(c.budget_s) + " s";
    }
    std::printf("[%s] C%-2d %-64s cases=%-6zu %.2fs\n", passed ? "PASS" : "FAIL", c.id,
                c.title.c_str(), cases, seconds);
    if (!passed) {
      std::printf("       %s\n", detail.c_str());
      ++failures;
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
