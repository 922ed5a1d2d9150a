#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "symchar/partition.hpp"

namespace symchar {

// Full enumeration of S(k) is refused above this degree.
inline constexpr int kMaxEnumerationDegree = 9;

// Disjoint cycle of a permutation; points are kept in cycle order starting
// at the minimum, which is the canonical key.
struct Cycle {
  std::vector<int> points;

  int min() const { return points.front(); }
  int length() const { return static_cast<int>(points.size()); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Bijection of {1..k}. Composition follows function composition:
// (a * b)(x) = a(b(x)), so b acts first.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int degree);

  // images[x-1] is the image of x. Throws DomainError unless a bijection.
  static Permutation from_images(std::vector<int> images);

  // Cycle notation "(1 2 3)(4 5)" or "id". Points must not exceed `degree`.
  // Throws ParseError.
  static Permutation parse(std::string_view text, int degree);

  // Degree of the smallest symmetric group containing the parsed text (the
  // largest point mentioned, at least 1 for "id").
  static int minimal_degree(std::string_view text);

  // Transposition (a b) in S(degree).
  static Permutation transposition(int a, int b, int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  // Image of the 1-based point x.
  int operator()(int x) const { return images_[x - 1]; }

  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;

  // Pads with fixed points up to `degree`.
  Permutation embedded(int degree) const;

  // Restricts to {1..degree}. Throws DomainError if a larger point moves.
  Permutation restricted(int degree) const;

  // Largest non-fixed point, 0 for the identity.
  int support_bound() const noexcept;

  bool is_identity() const noexcept;

  // Cycles including fixed points, sorted by their minima.
  std::vector<Cycle> cycles() const;

  int cycle_count() const;

  // Multiset of cycle lengths as a partition of degree().
  Partition cycle_type() const;

  // Cycle notation with fixed points omitted, "id" for the identity.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Canonical order: lexicographic on the image sequence.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// Visits every permutation of S(k) in lexicographic order of image
// sequences. Throws CapExceeded when k > kMaxEnumerationDegree.
template <class Visitor>
void for_each_permutation(int k, Visitor&& visit);

std::vector<Permutation> all_permutations(int k);

// One representative per cycle type of S(k), in canonical partition order of
// the cycle types. The representative of (l1, l2, ...) is
// (1 .. l1)(l1+1 .. l1+l2)...
std::vector<Permutation> cycle_type_representatives(int k);

Permutation representative_of_type(const Partition& cycle_type);

void check_enumeration_cap(int k);

}  // namespace symchar

#include <algorithm>
#include <numeric>

namespace symchar {

template <class Visitor>
void for_each_permutation(int k, Visitor&& visit) {
  check_enumeration_cap(k);
  std::vector<int> images(static_cast<std::size_t>(std::max(k, 0)));
  std::iota(images.begin(), images.end(), 1);
  do {
    visit(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace symchar
