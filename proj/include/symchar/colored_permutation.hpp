#pragma once

#include <vector>

#include "symchar/permutation.hpp"

namespace symchar {

// A permutation together with one color in {1..m} per cycle. colors()[j] is
// the color of cycles()[j], cycles being ordered by their minima.
class ColoredPermutation {
 public:
  // Throws DomainError if the number of colors does not match the number of
  // cycles or a color is < 1.
  ColoredPermutation(Permutation sigma, std::vector<int> cycle_colors);

  // Builds from a point coloring; throws DomainError unless it is constant
  // on every cycle of sigma.
  static ColoredPermutation from_point_coloring(Permutation sigma,
                                                const std::vector<int>& phi);

  const Permutation& sigma() const noexcept { return sigma_; }
  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
  const std::vector<int>& cycle_colors() const noexcept { return colors_; }

  // phi(x) for every point, phi[x-1].
  std::vector<int> point_coloring() const;

  int color_of_cycle_containing(int point) const;

  friend bool operator==(const ColoredPermutation& a,
                         const ColoredPermutation& b) {
    return a.sigma_ == b.sigma_ && a.colors_ == b.colors_;
  }

 private:
  Permutation sigma_;
  std::vector<Cycle> cycles_;
  std::vector<int> colors_;
};

// (sigma, phi) . mu = (sigma mu, psi) with psi(c) = max of phi over c.
// Throws DomainError on degree mismatch.
ColoredPermutation colored_product(const ColoredPermutation& cp,
                                   const Permutation& mu);

// Colors of the cycles of `product` obtained as the maximum of the point
// coloring `phi` over each cycle.
std::vector<int> max_coloring(const std::vector<Cycle>& product_cycles,
                              const std::vector<int>& phi);

// Visits every element of S(k)^(m) exactly once: permutations in
// lexicographic order of image sequence, and for each permutation the
// colorings in lexicographic order of (color of the cycle with the smallest
// minimum, next cycle, ...).
template <class Visitor>
void for_each_colored_permutation(int k, int m, Visitor&& visit) {
  for_each_permutation(k, [&](const Permutation& sigma) {
    const int cycle_count = sigma.cycle_count();
    std::vector<int> colors(static_cast<std::size_t>(cycle_count), 1);
    while (true) {
      visit(ColoredPermutation(sigma, colors));
      int j = cycle_count - 1;
      while (j >= 0 && colors[j] == m) colors[j--] = 1;
      if (j < 0) break;
      ++colors[j];
    }
  });
}

std::vector<ColoredPermutation> enumerate_colored_permutations(int k, int m);

// |S(k)^(m)| = sum over sigma of m^{number of cycles}.
Integer colored_permutation_count(int k, int m);

}  // namespace symchar
