#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symchar/partition.hpp"
#include "symchar/permutation.hpp"
#include "symchar/rational.hpp"

namespace symchar {

// chi_lambda at cycle type t by the Murnaghan-Nakayama rule.
// Throws DomainError when |lambda| != |t|.
Integer character_oracle(const Partition& lambda, const Partition& t);

// chi_nu(mu) with mu embedded in S(n) by adding fixed points.
Integer character_at(const Partition& nu, const Permutation& mu);

// (n)_k chi_nu(mu) / chi_nu(id), nu a partition of n, mu in S(k).
// Throws DomainError when k > n.
Rational normalized_character(const Partition& nu, const Permutation& mu);

class CharacterTable {
 public:
  explicit CharacterTable(int k);

  int degree() const noexcept { return k_; }
  // Both in canonical partition order.
  const std::vector<Partition>& shapes() const noexcept { return partitions_; }
  const std::vector<Partition>& cycle_types() const noexcept {
    return partitions_;
  }

  const Integer& value(std::size_t shape, std::size_t cycle_type) const {
    return values_[shape * partitions_.size() + cycle_type];
  }

  // Header row "lambda,<type>,<type>..." then one row per shape. Partitions
  // are written as dot-separated parts, e.g. 2.1.1, to keep commas for CSV.
  std::string to_csv() const;

 private:
  int k_;
  std::vector<Partition> partitions_;
  std::vector<Integer> values_;
};

struct OrthogonalityReport {
  bool passed = true;
  std::size_t pairs_checked = 0;
  // First failing (t, t', lhs, expected).
  std::optional<std::string> counterexample;
};

// sum_lambda chi_lambda(t) chi_lambda(t') = delta_{t,t'} k!/|class(t)| for
// every pair of cycle types of S(k).
OrthogonalityReport second_orthogonality_check(int k);

}  // namespace symchar
