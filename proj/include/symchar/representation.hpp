#pragma once

#include <vector>

#include "symchar/group_algebra.hpp"
#include "symchar/matrix.hpp"
#include "symchar/partition.hpp"
#include "symchar/permutation.hpp"
#include "symchar/tableau.hpp"

namespace symchar {

// Young's seminormal form of the irreducible representation of S(k) indexed
// by a partition of k. The basis is the list of standard tableaux in
// enumeration order. With r = c_T(i+1) - c_T(i), the adjacent transposition
// s_i = (i i+1) acts by
//   s_i v_T = (1/r) v_T + v_{T'}            if i+1 lies in a lower row than i,
//   s_i v_T = (1/r) v_T + (1 - 1/r^2) v_{T'} otherwise,
// where T' swaps i and i+1 (the second term is absent when T' is not
// standard). Every J_i then acts diagonally with eigenvalue c_T(i).
class SeminormalRepresentation {
 public:
  explicit SeminormalRepresentation(Partition shape);

  const Partition& shape() const noexcept { return shape_; }
  int degree() const noexcept { return shape_.size(); }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<StandardTableau>& basis() const noexcept { return basis_; }

  // Matrix of s_i = (i i+1), 1 <= i < k.
  const RationalMatrix& generator(int i) const { return generators_[i - 1]; }

  // Matrix of an arbitrary permutation of degree k, via a reduced word.
  RationalMatrix matrix_of(const Permutation& sigma) const;

  // Matrix of an element of Q[S(k)].
  RationalMatrix matrix_of(const GroupAlgebraElement& x) const;

  Rational character(const Permutation& sigma) const;

  // Sum of the matrices of all elements of the Young subgroup
  // S_{b1} x S_{b2} x ... acting on consecutive blocks of the given lengths.
  // Built from coset representatives s_{j-1} s_{j-2} ... of S_{j-1} in S_j,
  // so no group element is enumerated.
  RationalMatrix young_subgroup_sum(const std::vector<int>& block_lengths) const;

 private:
  // a * generator(i), using the column sparsity of the generator.
  RationalMatrix right_multiply_generator(const RationalMatrix& a, int i) const;

  Partition shape_;
  std::vector<StandardTableau> basis_;
  std::vector<RationalMatrix> generators_;
  // Per generator and column: (row, value) pairs of the nonzero entries.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>>
      generator_columns_;
};

SeminormalRepresentation build_seminormal(const Partition& lambda);

// Number of standard tableaux of shape lambda (hook-length formula).
Integer dimension(const Partition& lambda);

// chi_lambda(x) = sum_T <x v_T, v_T>, lambda a partition of k and x in
// Q[S(n)], n >= k. Throws DomainError if a term of x moves a point > k.
Rational character_of_element(const Partition& lambda,
                              const GroupAlgebraElement& x);
Rational character_of_element(const SeminormalRepresentation& rep,
                              const GroupAlgebraElement& x);

struct IdentityReport {
  bool passed = false;
  // Coefficients of X^0, X^1, ... on each side.
  std::vector<Integer> lhs;
  std::vector<Integer> rhs;
};

// dim(lambda) prod_{boxes}(X + c(box)) versus
// sum over sigma in S(k) of chi_lambda(sigma) X^{|C(sigma)|}.
IdentityReport dimension_content_identity_check(const Partition& lambda);

}  // namespace symchar
