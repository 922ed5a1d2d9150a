#include "symchar/stanley.hpp"

#include "symchar/character.hpp"
#include "symchar/colored_permutation.hpp"
#include "symchar/error.hpp"
#include "symchar/parallel.hpp"
#include "symchar/shifted_schur.hpp"

namespace symchar {

namespace {

// Calls visit(sigma_colors, psi) for every coloring of the cycles of sigma,
// with psi the max-coloring of the cycles of sigma * mu. The cycles of
// sigma * mu depend only on sigma and are computed once.
template <class Visitor>
void for_each_coloring(const Permutation& sigma, const Permutation& mu, int m,
                       Visitor&& visit) {
  const std::vector<Cycle> cycles = sigma.cycles();
  const std::vector<Cycle> product_cycles = (sigma * mu).cycles();
  std::vector<int> colors(cycles.size(), 1);
  std::vector<int> phi(static_cast<std::size_t>(sigma.degree()));
  while (true) {
    for (std::size_t j = 0; j < cycles.size(); ++j)
      for (int x : cycles[j].points) phi[x - 1] = colors[j];
    visit(colors, max_coloring(product_cycles, phi));

    int j = static_cast<int>(colors.size()) - 1;
    while (j >= 0 && colors[j] == m) colors[j--] = 1;
    if (j < 0) break;
    ++colors[j];
  }
}

}  // namespace

Rational stanley_rhs_numeric(const Permutation& mu, std::span<const Rational> p,
                             std::span<const Rational> q, unsigned threads) {
  const int k = mu.degree();
  const int m = static_cast<int>(p.size());
  if (k < 1) throw DomainError("mu must have positive degree");
  if (m < 1 || q.size() != p.size()) throw DomainError("p and q must have the same positive length");

  const auto sigmas = all_permutations(k);
  const auto partial = parallel_map<Rational>(sigmas.size(), threads, [&](std::size_t s) {
    Rational sum = 0;
    for_each_coloring(sigmas[s], mu, m, [&](const std::vector<int>& colors,
                                            const std::vector<int>& psi) {
      Rational term = 1;
      for (int c : colors) term *= p[c - 1];
      for (int c : psi) term *= -q[c - 1];
      sum += term;
    });
    return sum;
  });

  Rational total = 0;
  for (const auto& r : partial) total += r;
  return k % 2 == 0 ? total : Rational(-total);
}

Polynomial stanley_rhs_polynomial(const Permutation& mu, int m, unsigned threads) {
  const int k = mu.degree();
  if (k < 1) throw DomainError("mu must have positive degree");
  if (m < 1) throw DomainError("m must be positive");

  const auto sigmas = all_permutations(k);
  const auto partial = parallel_map<Polynomial>(sigmas.size(), threads, [&](std::size_t s) {
    Polynomial sum(2 * m);
    Polynomial::Exponents e(static_cast<std::size_t>(2 * m));
    for_each_coloring(sigmas[s], mu, m, [&](const std::vector<int>& colors,
                                            const std::vector<int>& psi) {
      std::fill(e.begin(), e.end(), 0);
      for (int c : colors) ++e[c - 1];
      for (int c : psi) ++e[m + c - 1];
      const bool negative = (k + static_cast<int>(psi.size())) % 2 != 0;
      sum.add_term(e, negative ? -1 : 1);
    });
    return sum;
  });

  Polynomial total(2 * m);
  for (const auto& poly : partial) total += poly;
  return total;
}

std::string stanley_variable_name(int index, int m) {
  return index < m ? "p" + std::to_string(index + 1) : "q" + std::to_string(index - m + 1);
}

MainTheoremReport verify_main_theorem(const Permutation& mu, std::span<const int> p,
                                      std::span<const int> q, unsigned threads) {
  MainTheoremReport report;
  report.shape = build_pq_partition(p, q);
  if (report.shape.size() < mu.degree())
    throw DomainError("sum of p_i q_i = " + std::to_string(report.shape.size()) +
                      " is smaller than k = " + std::to_string(mu.degree()));
  report.via_definition = normalized_character(report.shape, mu);
  report.via_shifted_schur = okounkov_olshanski_character(report.shape, mu);
  std::vector<Rational> pr(p.begin(), p.end());
  std::vector<Rational> qr(q.begin(), q.end());
  report.via_stanley = stanley_rhs_numeric(mu, pr, qr, threads);
  report.agree = report.via_definition == report.via_shifted_schur &&
                 report.via_shifted_schur == report.via_stanley;
  return report;
}

FunctionalEquationReport verify_functional_equation(
    const Permutation& mu, int m, int i, const std::vector<std::vector<Rational>>& sample_grid) {
  if (m < 2) throw DomainError("the functional equation needs m >= 2");
  if (i < 1 || i >= m) throw DomainError("index i must satisfy 1 <= i < m");
  FunctionalEquationReport report;

  // Variables p_j -> j-1, q_j -> m+j-1.
  std::vector<int> identify(static_cast<std::size_t>(2 * m));
  for (int v = 0; v < 2 * m; ++v) identify[v] = v;
  identify[m + i] = m + i - 1;
  report.restricted = stanley_rhs_polynomial(mu, m).remap(2 * m, identify);

  std::vector<int> lift(static_cast<std::size_t>(2 * (m - 1)));
  for (int j = 1; j <= m - 1; ++j) {
    lift[j - 1] = j <= i ? j - 1 : j;
    lift[m - 1 + j - 1] = j <= i ? m + j - 1 : m + j;
  }
  const Polynomial lifted = stanley_rhs_polynomial(mu, m - 1).remap(2 * m, lift);
  const Polynomial sum = Polynomial::variable(2 * m, i - 1) + Polynomial::variable(2 * m, i);
  report.merged = lifted.substitute(i - 1, sum);
  report.passed = report.restricted == report.merged;

  // Numeric cross-check through the enumeration engine on both sides.
  for (const auto& point : sample_grid) {
    if (static_cast<int>(point.size()) != 2 * m)
      throw DomainError("sample points must have 2m coordinates");
    std::vector<Rational> p(point.begin(), point.begin() + m);
    std::vector<Rational> q(point.begin() + m, point.end());
    q[i] = q[i - 1];
    const Rational lhs = stanley_rhs_numeric(mu, p, q);

    std::vector<Rational> p2, q2;
    for (int j = 1; j <= m; ++j) {
      if (j == i + 1) continue;
      p2.push_back(j == i ? p[i - 1] + p[i] : p[j - 1]);
      q2.push_back(q[j - 1]);
    }
    if (lhs != stanley_rhs_numeric(mu, p2, q2)) {
      report.passed = false;
      report.failing_points.push_back(point);
    }
  }
  return report;
}

}  // namespace symchar
