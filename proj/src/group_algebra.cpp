#include "symchar/group_algebra.hpp"

#include <cstdint>
#include <unordered_map>

#include "symchar/error.hpp"
#include "symchar/index_sequence.hpp"

namespace symchar {

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& sigma,
                                               const Rational& coefficient) {
  GroupAlgebraElement x(sigma.degree());
  x.add_term(sigma, coefficient);
  return x;
}

GroupAlgebraElement GroupAlgebraElement::scalar(int degree, const Rational& coefficient) {
  return basis(Permutation::identity(degree), coefficient);
}

Rational GroupAlgebraElement::coefficient(const Permutation& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& sigma, const Rational& c) {
  if (sigma.degree() != degree_) throw DomainError("degree mismatch in group algebra term");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(sigma, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  if (other.degree_ != degree_) throw DomainError("degree mismatch in sum");
  for (const auto& [sigma, c] : other.terms_) add_term(sigma, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  if (other.degree_ != degree_) throw DomainError("degree mismatch in difference");
  for (const auto& [sigma, c] : other.terms_) add_term(sigma, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [sigma, coeff] : terms_) coeff *= c;
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return multiply(a, b);
}

GroupAlgebraElement GroupAlgebraElement::embedded(int degree) const {
  GroupAlgebraElement out(degree);
  for (const auto& [sigma, c] : terms_) out.terms_.emplace(sigma.embedded(degree), c);
  return out;
}

std::vector<std::pair<std::string, std::string>> GroupAlgebraElement::serialize() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(terms_.size());
  for (const auto& [sigma, c] : terms_) out.emplace_back(sigma.to_string(), to_string(c));
  return out;
}

namespace {

// Permutations of degree <= 16 packed as 4-bit 0-based images.
constexpr int kPackedDegree = 16;

std::uint64_t pack(const std::vector<int>& images) {
  std::uint64_t key = 0;
  for (std::size_t x = 0; x < images.size(); ++x)
    key |= static_cast<std::uint64_t>(images[x] - 1) << (4 * x);
  return key;
}

int packed_image(std::uint64_t key, int x) { return static_cast<int>((key >> (4 * x)) & 0xF); }

// sum over s of s * x; additions only.
GroupAlgebraElement left_translate_sum(const std::vector<Permutation>& elements,
                                       const GroupAlgebraElement& x) {
  const int n = x.degree();
  if (n > kPackedDegree) {
    GroupAlgebraElement out(n);
    for (const auto& s : elements) out += multiply(GroupAlgebraElement::basis(s), x);
    return out;
  }
  std::unordered_map<std::uint64_t, Rational> acc;
  acc.reserve(elements.size() * x.terms().size());
  for (const auto& s : elements) {
    const std::uint64_t ks = pack(s.images());
    for (const auto& [sigma, c] : x.terms()) {
      std::uint64_t key = 0;
      for (int p = 0; p < n; ++p)
        key |= static_cast<std::uint64_t>(packed_image(ks, sigma.images()[p] - 1)) << (4 * p);
      acc[key] += c;
    }
  }
  GroupAlgebraElement out(n);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (const auto& [key, c] : acc) {
    if (c == 0) continue;
    for (int p = 0; p < n; ++p) images[p] = packed_image(key, p) + 1;
    out.add_term(Permutation::from_images(images), c);
  }
  return out;
}

}  // namespace

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.degree() != b.degree()) throw DomainError("degree mismatch in product");
  const int n = a.degree();
  GroupAlgebraElement out(n);
  if (n > kPackedDegree) {
    for (const auto& [sa, ca] : a.terms())
      for (const auto& [sb, cb] : b.terms()) out.add_term(sa * sb, ca * cb);
    return out;
  }

  std::vector<std::pair<std::uint64_t, const Rational*>> left, right;
  for (const auto& [s, c] : a.terms()) left.emplace_back(pack(s.images()), &c);
  for (const auto& [s, c] : b.terms()) right.emplace_back(pack(s.images()), &c);

  std::unordered_map<std::uint64_t, Rational> acc;
  acc.reserve(left.size() * right.size());
  for (const auto& [ka, ca] : left)
    for (const auto& [kb, cb] : right) {
      // (a * b)(x) = a(b(x))
      std::uint64_t key = 0;
      for (int x = 0; x < n; ++x)
        key |= static_cast<std::uint64_t>(packed_image(ka, packed_image(kb, x))) << (4 * x);
      acc[key] += *ca * *cb;
    }

  std::vector<int> images(static_cast<std::size_t>(n));
  for (const auto& [key, c] : acc) {
    if (c == 0) continue;
    for (int x = 0; x < n; ++x) images[x] = packed_image(key, x) + 1;
    out.add_term(Permutation::from_images(images), c);
  }
  return out;
}

GroupAlgebraElement jucys_murphy(int i, int n) {
  if (i < 1 || i > n) throw DomainError("Jucys-Murphy index out of range");
  GroupAlgebraElement out(n);
  for (int j = 1; j < i; ++j) out.add_term(Permutation::transposition(j, i, n), 1);
  return out;
}

GroupAlgebraElement jm_factored_product(std::span<const Rational> x, int n) {
  const int k = static_cast<int>(x.size());
  if (k < 1) throw DomainError("at least one variable is required");
  if (n < k) throw DomainError("degree must be at least the number of variables");
  GroupAlgebraElement out = GroupAlgebraElement::scalar(n, x[0]);
  for (int j = 2; j <= k; ++j) {
    GroupAlgebraElement factor = GroupAlgebraElement::scalar(n, x[j - 1]);
    factor -= jucys_murphy(j, n);
    out = multiply(out, factor);
  }
  return out;
}

GroupAlgebraElement jm_combinatorial_expansion(std::span<const Rational> x, int n) {
  const int k = static_cast<int>(x.size());
  if (k < 1) throw DomainError("at least one variable is required");
  if (n < k) throw DomainError("degree must be at least the number of variables");
  GroupAlgebraElement out(n);
  const int global_sign = (k % 2 == 0) ? 1 : -1;
  for_each_permutation(k, [&](const Permutation& sigma) {
    Rational coeff = global_sign;
    for (const auto& c : sigma.cycles()) coeff *= -x[c.min() - 1];
    out.add_term(sigma.embedded(n), coeff);
  });
  return out;
}

GroupAlgebraElement build_S_k_nu(int k, const Partition& nu, int index_bound) {
  const int n = nu.size();
  if (k < 1) throw DomainError("k must be positive");
  if (n < k) throw DomainError("S^k_nu requires |nu| >= k");
  const int bound = index_bound < 0 ? nu.length() : index_bound;

  // Every factor lies in the image of S(k); work there and embed once.
  GroupAlgebraElement out(k);
  std::vector<Rational> x(static_cast<std::size_t>(k));
  for (const auto& seq : decreasing_sequences(k, bound)) {
    for (int j = 1; j <= k; ++j) x[j - 1] = nu.part(seq[j]);

    const auto stab = stabilizer_elements(seq);
    GroupAlgebraElement orbit_sum = left_translate_sum(stab, jm_factored_product(x, k));
    orbit_sum *= make_rational(1, static_cast<long>(stab.size()));
    out += orbit_sum;
  }
  return out.embedded(n);
}

Rational class_component(const GroupAlgebraElement& x, const Partition& t) {
  if (t.size() != x.degree())
    throw DomainError("cycle type " + t.to_string() + " is not a partition of " +
                      std::to_string(x.degree()));
  Rational sum = 0;
  for (const auto& [sigma, c] : x.terms())
    if (sigma.cycle_type() == t) sum += c;
  return sum;
}

}  // namespace symchar
