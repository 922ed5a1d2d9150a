#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "symchar/rational.hpp"

namespace symchar {

// Sparse polynomial with integer coefficients in a fixed number of
// variables. Zero coefficients are never stored.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(int variables = 0) : variables_(variables) {}

  static Polynomial constant(int variables, const Integer& c);
  // The single variable x_index (0-based).
  static Polynomial variable(int variables, int index);

  int variable_count() const noexcept { return variables_; }
  const std::map<Exponents, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Exponents& e) const;

  // Adds c * x^e. Throws DomainError when e has the wrong length.
  void add_term(const Exponents& e, const Integer& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Rational evaluate(std::span<const Rational> point) const;

  // Replaces x_index by `replacement` (a polynomial in the same variables).
  Polynomial substitute(int index, const Polynomial& replacement) const;

  // Moves every term into a space of `variables` variables, x_j going to
  // x_{target[j]}. Exponents of variables mapped to the same target add.
  Polynomial remap(int variables, const std::vector<int>& target) const;

  // Largest exponent sum over all terms; -1 for the zero polynomial.
  int total_degree() const;

  // Terms sorted by graded lexicographic order, largest first, printed as
  // "c*x1^a*x2^b" with unit coefficients and exponents omitted. `name`
  // maps a 0-based variable index to its printed name.
  std::string to_string(const std::function<std::string(int)>& name) const;

 private:
  int variables_;
  std::map<Exponents, Integer> terms_;
};

}  // namespace symchar
