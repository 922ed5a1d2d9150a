#pragma once

#include <span>
#include <vector>

#include "symchar/partition.hpp"
#include "symchar/permutation.hpp"
#include "symchar/rational.hpp"

namespace symchar {

// (r)_t = r (r-1) ... (r-t+1); (r)_0 = 1.
Rational falling_factorial(const Rational& r, int t);

// s*_lambda(x_1..x_l) as the ratio
//   det((x_i + l - i)_{lambda_j + l - j}) / det((x_i + l - i)_{l - j}),
// evaluated with l = max(length(lambda), x.size()) after padding x with
// zeros. Throws SingularDenominator when two of the x_i + l - i coincide.
Rational shifted_schur_determinant(const Partition& lambda,
                                   std::span<const Rational> x);

// Convenience overload for partition arguments.
Rational shifted_schur_determinant(const Partition& lambda,
                                   const Partition& nu);

struct StabilityReport {
  bool passed = false;
  Rational without_zero;
  Rational with_zero;
};

// Compares s*_lambda(x) with s*_lambda(x, 0).
StabilityReport stability_check(const Partition& lambda,
                                std::span<const Rational> x);

// Double sum over standard tableaux T of shape lambda and index sequences
// i_1 >= ... >= i_k of
//   (1/|Stab(i)|) sum_{s in Stab(i)} <s v_T, v_T> nu_{i_1}
//     (nu_{i_2} - c_T(2)) ... (nu_{i_k} - c_T(k)),
// using seminormal diagonal entries for the inner products.
Rational shifted_schur_combinatorial(const Partition& lambda,
                                     const Partition& nu);

// chi_lambda(S^k_nu). Throws DomainError when |nu| < |lambda|.
Rational shifted_schur_via_group_algebra(const Partition& lambda,
                                         const Partition& nu);

// sum over lambda of k of chi_lambda(mu) s*_lambda(nu).
// Throws DomainError when k > n.
Rational okounkov_olshanski_character(const Partition& nu,
                                      const Permutation& mu);

}  // namespace symchar
