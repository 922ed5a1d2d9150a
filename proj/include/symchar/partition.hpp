#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symchar/rational.hpp"

namespace symchar {

// Weakly decreasing sequence of positive integers. The empty partition is
// the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  // Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  // Sorts an arbitrary multiset of positive integers into a partition.
  static Partition from_multiset(std::vector<int> values);

  // "3,3,2". Throws ParseError.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  // 1-based part access; returns 0 beyond length().
  int part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }

  // Number of parts equal to `value`.
  int multiplicity(int value) const noexcept;

  // Returns this partition extended by `count` parts equal to 1.
  Partition padded_with_ones(int count) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// p × q: p[0] parts equal to q[0], then p[1] parts equal to q[1], ...
// Throws DomainError on length mismatch, non-positive entries or
// non-monotone q.
Partition build_pq_partition(std::span<const int> p, std::span<const int> q);

// Splits a partition into (multiplicities, distinct part values), the
// inverse of build_pq_partition with strictly decreasing q.
void decompose_pq(const Partition& lambda, std::vector<int>& p,
                  std::vector<int>& q);

// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...,
// (1^n). This is the canonical partition order used for tables and output.
std::vector<Partition> partitions_of(int n);

// Hook-length formula: number of standard tableaux of shape lambda.
Integer hook_length_dimension(const Partition& lambda);

// Number of permutations in S(n) of cycle type t:
// n! / (prod l_i * prod (multiplicity of l)!).
Integer conjugacy_class_size(const Partition& cycle_type);

// n!
Integer factorial(int n);

}  // namespace symchar
