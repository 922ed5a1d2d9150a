#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symchar/partition.hpp"
#include "symchar/permutation.hpp"
#include "symchar/polynomial.hpp"
#include "symchar/rational.hpp"

namespace symchar {

// (-1)^k sum over (sigma, phi) in S(k)^(m) of
//   prod_{b in C(sigma)} p_{phi(b)} prod_{c in C(sigma mu)} (-q_{psi(c)}),
// with psi the max-coloring of the cycles of sigma mu. k = mu.degree(),
// m = p.size(). Throws DomainError when p and q differ in length or are
// empty. `threads` splits the outer permutation loop.
Rational stanley_rhs_numeric(const Permutation& mu, std::span<const Rational> p,
                             std::span<const Rational> q, unsigned threads = 1);

// Variables are ordered p_1..p_m, q_1..q_m.
Polynomial stanley_rhs_polynomial(const Permutation& mu, int m,
                                  unsigned threads = 1);

// Printed names p1..pm, q1..qm for a 2m-variable polynomial.
std::string stanley_variable_name(int index, int m);

struct MainTheoremReport {
  Partition shape;            // p x q
  Rational via_definition;    // normalized_character
  Rational via_shifted_schur; // okounkov_olshanski_character
  Rational via_stanley;       // stanley_rhs_numeric
  bool agree = false;
};

// Throws DomainError when sum p_i q_i < k or the inputs do not define p x q.
MainTheoremReport verify_main_theorem(const Permutation& mu,
                                      std::span<const int> p,
                                      std::span<const int> q,
                                      unsigned threads = 1);

struct FunctionalEquationReport {
  bool passed = false;
  Polynomial restricted;   // F_m with q_{i+1} := q_i
  Polynomial merged;       // F_{m-1} with p_i := p_i + p_{i+1}, lifted
  // Points of the sample grid (if any) at which the two sides disagree.
  std::vector<std::vector<Rational>> failing_points;
};

// Symbolic check of
//   F(p, q)|_{q_i = q_{i+1}} = F(p_1, .., p_i + p_{i+1}, .., p_m,
//                                q_1, .., q_i, q_{i+2}, .., q_m)
// for F = stanley_rhs_polynomial(mu, .). `i` is 1-based, 1 <= i < m. The
// optional sample grid holds full (p_1..p_m, q_1..q_m) points at which both
// sides are additionally evaluated numerically.
// Throws DomainError when m < 2 or i is out of range.
FunctionalEquationReport verify_functional_equation(
    const Permutation& mu, int m, int i,
    const std::vector<std::vector<Rational>>& sample_grid = {});

}  // namespace symchar
