#include "symchar/colored_permutation.hpp"

#include <algorithm>

#include "symchar/error.hpp"

namespace symchar {

ColoredPermutation::ColoredPermutation(Permutation sigma, std::vector<int> cycle_colors)
    : sigma_(std::move(sigma)), cycles_(sigma_.cycles()), colors_(std::move(cycle_colors)) {
  if (colors_.size() != cycles_.size())
    throw DomainError("one color per cycle is required");
  for (int c : colors_)
    if (c < 1) throw DomainError("colors are numbered from 1");
}

ColoredPermutation ColoredPermutation::from_point_coloring(Permutation sigma,
                                                           const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != sigma.degree())
    throw DomainError("point coloring length differs from degree");
  std::vector<int> colors;
  for (const auto& c : sigma.cycles()) {
    const int color = phi[c.min() - 1];
    for (int x : c.points)
      if (phi[x - 1] != color)
        throw DomainError("point coloring is not constant on the cycles of sigma");
    colors.push_back(color);
  }
  return ColoredPermutation(std::move(sigma), std::move(colors));
}

std::vector<int> ColoredPermutation::point_coloring() const {
  std::vector<int> phi(static_cast<std::size_t>(sigma_.degree()));
  for (std::size_t j = 0; j < cycles_.size(); ++j)
    for (int x : cycles_[j].points) phi[x - 1] = colors_[j];
  return phi;
}

int ColoredPermutation::color_of_cycle_containing(int point) const {
  for (std::size_t j = 0; j < cycles_.size(); ++j)
    if (std::find(cycles_[j].points.begin(), cycles_[j].points.end(), point) !=
        cycles_[j].points.end())
      return colors_[j];
  throw DomainError("point out of range");
}

std::vector<int> max_coloring(const std::vector<Cycle>& product_cycles,
                              const std::vector<int>& phi) {
  std::vector<int> psi;
  psi.reserve(product_cycles.size());
  for (const auto& c : product_cycles) {
    int best = 0;
    for (int a : c.points) best = std::max(best, phi[a - 1]);
    psi.push_back(best);
  }
  return psi;
}

ColoredPermutation colored_product(const ColoredPermutation& cp, const Permutation& mu) {
  if (cp.sigma().degree() != mu.degree())
    throw DomainError("degree mismatch in colored product");
  Permutation product = cp.sigma() * mu;
  std::vector<int> psi = max_coloring(product.cycles(), cp.point_coloring());
  return ColoredPermutation(std::move(product), std::move(psi));
}

std::vector<ColoredPermutation> enumerate_colored_permutations(int k, int m) {
  if (k < 1 || m < 1) throw DomainError("k and m must be positive");
  std::vector<ColoredPermutation> out;
  for_each_colored_permutation(k, m, [&](const ColoredPermutation& cp) { out.push_back(cp); });
  return out;
}

Integer colored_permutation_count(int k, int m) {
  // sum_sigma m^{c(sigma)} = m (m+1) ... (m+k-1)
  Integer count = 1;
  for (int j = 0; j < k; ++j) count *= m + j;
  return count;
}

}  // namespace symchar
