#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symchar/partition.hpp"
#include "symchar/permutation.hpp"
#include "symchar/rational.hpp"

namespace symchar {

// Element of Q[S(n)]: a finite formal sum of permutations of degree n with
// exact rational coefficients. Zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  using Terms = std::map<Permutation, Rational>;

  explicit GroupAlgebraElement(int degree = 0) : degree_(degree) {}

  // coefficient * sigma.
  static GroupAlgebraElement basis(const Permutation& sigma,
                                   const Rational& coefficient = 1);

  // coefficient * identity.
  static GroupAlgebraElement scalar(int degree, const Rational& coefficient);

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Permutation& sigma) const;

  // Adds c * sigma. Throws DomainError on degree mismatch.
  void add_term(const Permutation& sigma, const Rational& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Rational& c);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    return a -= b;
  }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a,
                                       const Rational& c) {
    return a *= c;
  }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                       const GroupAlgebraElement& b);

  friend bool operator==(const GroupAlgebraElement& a,
                         const GroupAlgebraElement& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  // Same element viewed in Q[S(degree)], degree >= this->degree().
  GroupAlgebraElement embedded(int degree) const;

  // (cycle notation, "a/b") pairs in canonical permutation order.
  std::vector<std::pair<std::string, std::string>> serialize() const;

 private:
  int degree_;
  Terms terms_;
};

// Convolution product. Throws DomainError on degree mismatch.
GroupAlgebraElement multiply(const GroupAlgebraElement& a,
                             const GroupAlgebraElement& b);

// J_i = (1 i) + (2 i) + ... + (i-1 i) in Q[S(n)]; J_1 = 0.
// Throws DomainError unless 1 <= i <= n.
GroupAlgebraElement jucys_murphy(int i, int n);

// X_1 (X_2 - J_2) ... (X_k - J_k), multiplied left to right in Q[S(n)].
GroupAlgebraElement jm_factored_product(std::span<const Rational> x, int n);

// (-1)^k sum over sigma in S(k) of prod_{c in C(sigma)} (-X_{min c}) sigma,
// embedded in Q[S(n)].
GroupAlgebraElement jm_combinatorial_expansion(std::span<const Rational> x,
                                               int n);

// The element
//   sum over i_1 >= ... >= i_k >= 1 of
//     (sum_{s in Stab(i)} s) / |Stab(i)| * nu_{i_1} (nu_{i_2} - J_2) ...
//     (nu_{i_k} - J_k)
// in Q[S(n)], n = |nu|. The index sum stops at i_1 = length(nu) since the
// leading factor vanishes beyond. `index_bound` overrides that limit (values
// above length(nu) contribute zero); it exists for testing the truncation.
// Throws DomainError when n < k.
GroupAlgebraElement build_S_k_nu(int k, const Partition& nu,
                                 int index_bound = -1);

// Sum of the coefficients of x over permutations of cycle type t.
// Throws DomainError unless t is a partition of x.degree().
Rational class_component(const GroupAlgebraElement& x, const Partition& t);

}  // namespace symchar
