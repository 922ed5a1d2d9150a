#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symchar {

// Sweep limits shared by all identity suites. Each suite reads the fields
// relevant to it:
//   lemma2             k <= max_k, `samples` random rational vectors per k
//   lemma3, eq11,
//   dimension-identity partitions of k <= max_k
//   eq3                traces vs oracle for k <= max_k; sum of dim^2 = k!
//                      and tableau counts vs hook lengths for k <= max_n
//   eq8, thm8          lambda of k <= max_k, nu of n <= max_n with
//                      length(nu) <= max_length (thm8 also needs n >= k)
//   thm6               k <= max_k, nu of n in [k, max_n]
//   thm1               k <= max_k, m' <= m, p in {1..max_entry}^m',
//                      q weakly decreasing in {1..max_entry}^m'
//   functional-eq      every mu of degree k <= max_k, m' in [2, m], all i
//   rectangle          k <= max_k, rectangles p x q with p, q <= max_side
struct SuiteBounds {
  int max_k = 6;
  int max_n = 8;
  int m = 3;
  int max_entry = 3;
  int max_length = 4;
  int max_side = 4;
  int samples = 20;
  std::uint64_t seed = 0x5eed2008;
  unsigned threads = 1;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;
  double duration_ms = 0;
};

// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();

// Throws DomainError for an unknown name.
CheckResult run_suite(std::string_view name, const SuiteBounds& bounds);

// `name` may be "all".
std::vector<CheckResult> run_suites(std::string_view name, const SuiteBounds& bounds);

}  // namespace symchar
