#include "symchar/shifted_schur.hpp"

#include <algorithm>
#include <map>

#include "symchar/character.hpp"
#include "symchar/error.hpp"
#include "symchar/group_algebra.hpp"
#include "symchar/index_sequence.hpp"
#include "symchar/matrix.hpp"
#include "symchar/representation.hpp"

namespace symchar {

Rational falling_factorial(const Rational& r, int t) {
  if (t < 0) throw DomainError("falling factorial depth must be nonnegative");
  Rational out = 1;
  for (int j = 0; j < t; ++j) out *= r - j;
  return out;
}

Rational shifted_schur_determinant(const Partition& lambda, std::span<const Rational> x) {
  const int l = std::max(lambda.length(), static_cast<int>(x.size()));
  if (l == 0) return 1;

  std::vector<Rational> shifted(static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i) {
    const Rational xi = i <= static_cast<int>(x.size()) ? x[i - 1] : Rational(0);
    shifted[i - 1] = xi + (l - i);
  }

  RationalMatrix numerator(l, l);
  RationalMatrix denominator(l, l);
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      numerator(i - 1, j - 1) = falling_factorial(shifted[i - 1], lambda.part(j) + l - j);
      denominator(i - 1, j - 1) = falling_factorial(shifted[i - 1], l - j);
    }

  const Rational den = determinant(std::move(denominator));
  if (den == 0)
    throw SingularDenominator("shifted Schur denominator vanishes: two of x_i + l - i coincide");
  return determinant(std::move(numerator)) / den;
}

Rational shifted_schur_determinant(const Partition& lambda, const Partition& nu) {
  std::vector<Rational> x(nu.parts().begin(), nu.parts().end());
  return shifted_schur_determinant(lambda, x);
}

StabilityReport stability_check(const Partition& lambda, std::span<const Rational> x) {
  StabilityReport report;
  report.without_zero = shifted_schur_determinant(lambda, x);
  std::vector<Rational> extended(x.begin(), x.end());
  extended.emplace_back(0);
  report.with_zero = shifted_schur_determinant(lambda, extended);
  report.passed = report.without_zero == report.with_zero;
  return report;
}

Rational shifted_schur_combinatorial(const Partition& lambda, const Partition& nu) {
  const int k = lambda.size();
  const SeminormalRepresentation rep = build_seminormal(lambda);
  const auto& tableaux = rep.basis();

  std::vector<std::vector<int>> contents;
  for (const auto& t : tableaux) {
    std::vector<int> c(static_cast<std::size_t>(k) + 1, 0);
    for (int a = 1; a <= k; ++a) c[a] = t.content(a);
    contents.push_back(std::move(c));
  }

  // Diagonal of the summed stabilizer matrix, keyed by block structure; the
  // same Young subgroups recur across index sequences.
  std::map<std::vector<int>, std::vector<Rational>> stabilizer_diagonals;

  Rational total = 0;
  for (const auto& seq : decreasing_sequences(k, nu.length())) {
    const std::vector<int> blocks = seq.block_lengths();
    auto it = stabilizer_diagonals.find(blocks);
    if (it == stabilizer_diagonals.end()) {
      const RationalMatrix sum = rep.young_subgroup_sum(blocks);
      std::vector<Rational> d(rep.dimension());
      for (std::size_t t = 0; t < d.size(); ++t) d[t] = sum(t, t);
      it = stabilizer_diagonals.emplace(blocks, std::move(d)).first;
    }
    const std::vector<Rational>& weight = it->second;
    const Rational inv_order = 1 / Rational(stabilizer_order(seq));
    for (std::size_t t = 0; t < tableaux.size(); ++t) {
      if (weight[t] == 0) continue;
      Rational factor = nu.part(seq[1]);
      for (int a = 2; a <= k && factor != 0; ++a) factor *= nu.part(seq[a]) - contents[t][a];
      total += inv_order * weight[t] * factor;
    }
  }
  return total;
}

Rational shifted_schur_via_group_algebra(const Partition& lambda, const Partition& nu) {
  const int k = lambda.size();
  if (nu.size() < k)
    throw DomainError("group algebra route needs |nu| >= |lambda|");
  return character_of_element(lambda, build_S_k_nu(k, nu));
}

Rational okounkov_olshanski_character(const Partition& nu, const Permutation& mu) {
  const int k = mu.degree();
  if (k > nu.size())
    throw DomainError("needs k <= n, got k=" + std::to_string(k) +
                      ", n=" + std::to_string(nu.size()));
  const Partition type = mu.cycle_type();
  Rational total = 0;
  for (const auto& lambda : partitions_of(k)) {
    const Integer chi = character_oracle(lambda, type);
    if (chi == 0) continue;
    total += Rational(chi) * shifted_schur_determinant(lambda, nu);
  }
  return total;
}

}  // namespace symchar
