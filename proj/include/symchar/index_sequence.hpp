#pragma once

#include <vector>

#include "symchar/permutation.hpp"

namespace symchar {

// Weakly decreasing sequence i_1 >= i_2 >= ... >= i_k >= 1.
class IndexSequence {
 public:
  // Throws DomainError unless weakly decreasing with values >= 1.
  explicit IndexSequence(std::vector<int> values);

  const std::vector<int>& values() const noexcept { return values_; }
  int length() const noexcept { return static_cast<int>(values_.size()); }
  int operator[](int position) const { return values_[position - 1]; }

  // Lengths of the maximal blocks of equal values, left to right.
  std::vector<int> block_lengths() const;

 private:
  std::vector<int> values_;
};

// True when i o tau = i, i.e. i[tau(j)] = i[j] for all j.
bool fixes(const std::vector<int>& i, const Permutation& tau);

// |Stab(i)| = product over values of (multiplicity)!.
Integer stabilizer_order(const IndexSequence& i);

// Elements of Stab(i) as permutations of S(k), generated as the Young
// subgroup product of the symmetric groups on equal-value blocks.
std::vector<Permutation> stabilizer_elements(const IndexSequence& i);

// Every weakly decreasing sequence of length k with values in 1..max_value,
// in lexicographic order.
std::vector<IndexSequence> decreasing_sequences(int k, int max_value);

}  // namespace symchar
