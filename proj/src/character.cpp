#include "symchar/character.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "symchar/error.hpp"
#include "symchar/representation.hpp"

namespace symchar {

namespace {

// Murnaghan-Nakayama on beta sets: removing a border strip of length r is
// moving one bead from b to b - r onto a free position; the strip height
// minus one equals the number of beads strictly between.
class MurnaghanNakayama {
 public:
  explicit MurnaghanNakayama(std::vector<int> cycle_lengths)
      : lengths_(std::move(cycle_lengths)) {}

  Integer evaluate(const std::vector<int>& parts, std::size_t next) {
    if (next == lengths_.size()) return parts.empty() ? 1 : 0;
    auto key = std::make_pair(parts, next);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = lengths_[next];
    const int len = static_cast<int>(parts.size());
    std::vector<int> beta(parts.size());
    for (int j = 0; j < len; ++j) beta[j] = parts[j] + (len - 1 - j);

    Integer total = 0;
    for (int j = 0; j < len; ++j) {
      const int target = beta[j] - r;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int between = 0;
      for (int b : beta)
        if (b > target && b < beta[j]) ++between;

      std::vector<int> moved = beta;
      moved[j] = target;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> reduced;
      for (int l = 0; l < len; ++l) {
        const int part = moved[l] - (len - 1 - l);
        if (part > 0) reduced.push_back(part);
      }
      const Integer sub = evaluate(reduced, next + 1);
      if (between % 2 == 0)
        total += sub;
      else
        total -= sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::vector<int> lengths_;
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo_;
};

}  // namespace

Integer character_oracle(const Partition& lambda, const Partition& t) {
  if (lambda.size() != t.size())
    throw DomainError("shape " + lambda.to_string() + " and cycle type " + t.to_string() +
                      " have different sizes");
  MurnaghanNakayama mn(t.parts());
  return mn.evaluate(lambda.parts(), 0);
}

Integer character_at(const Partition& nu, const Permutation& mu) {
  if (mu.degree() > nu.size())
    throw DomainError("permutation degree exceeds |nu|");
  return character_oracle(nu, mu.cycle_type().padded_with_ones(nu.size() - mu.degree()));
}

Rational normalized_character(const Partition& nu, const Permutation& mu) {
  const int n = nu.size();
  const int k = mu.degree();
  if (k > n)
    throw DomainError("normalized character needs k <= n, got k=" + std::to_string(k) +
                      ", n=" + std::to_string(n));
  Integer falling = 1;
  for (int j = 0; j < k; ++j) falling *= n - j;
  return make_rational(falling * character_at(nu, mu), dimension(nu));
}

CharacterTable::CharacterTable(int k) : k_(k), partitions_(partitions_of(k)) {
  values_.reserve(partitions_.size() * partitions_.size());
  for (const auto& lambda : partitions_)
    for (const auto& t : partitions_) values_.push_back(character_oracle(lambda, t));
}

std::string CharacterTable::to_csv() const {
  auto label = [](const Partition& p) {
    std::string s = p.to_string();
    std::replace(s.begin(), s.end(), ',', '.');
    return s;
  };
  std::string out = "lambda";
  for (const auto& t : partitions_) out += "," + label(t);
  out += '\n';
  for (std::size_t i = 0; i < partitions_.size(); ++i) {
    out += label(partitions_[i]);
    for (std::size_t j = 0; j < partitions_.size(); ++j) out += "," + value(i, j).get_str();
    out += '\n';
  }
  return out;
}

OrthogonalityReport second_orthogonality_check(int k) {
  OrthogonalityReport report;
  const CharacterTable table(k);
  const auto& types = table.cycle_types();
  const Integer group_order = factorial(k);
  for (std::size_t a = 0; a < types.size(); ++a) {
    for (std::size_t b = 0; b < types.size(); ++b) {
      Integer sum = 0;
      for (std::size_t l = 0; l < table.shapes().size(); ++l)
        sum += table.value(l, a) * table.value(l, b);
      const Integer expected = a == b ? Integer(group_order / conjugacy_class_size(types[a]))
                                      : Integer(0);
      ++report.pairs_checked;
      if (sum != expected && report.passed) {
        report.passed = false;
        report.counterexample = "t=" + types[a].to_string() + " t'=" + types[b].to_string() +
                                " sum=" + sum.get_str() + " expected=" + expected.get_str();
      }
    }
  }
  return report;
}

}  // namespace symchar
