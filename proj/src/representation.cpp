#include "symchar/representation.hpp"

#include <map>

#include "symchar/character.hpp"
#include "symchar/error.hpp"

namespace symchar {

SeminormalRepresentation::SeminormalRepresentation(Partition shape)
    : shape_(std::move(shape)), basis_(enumerate_standard_tableaux(shape_)) {
  const int k = shape_.size();
  const std::size_t d = basis_.size();
  std::map<std::vector<std::vector<int>>, std::size_t> index;
  for (std::size_t t = 0; t < d; ++t) index.emplace(basis_[t].rows(), t);

  for (int i = 1; i < k; ++i) {
    RationalMatrix m(d, d);
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(d);
    for (std::size_t t = 0; t < d; ++t) {
      const StandardTableau& tab = basis_[t];
      const int r = tab.content(i + 1) - tab.content(i);
      const Rational inv = make_rational(1, r);
      m(t, t) = inv;
      columns[t].emplace_back(t, inv);
      if (tab.row_of(i) == tab.row_of(i + 1) || tab.column_of(i) == tab.column_of(i + 1))
        continue;
      const std::size_t partner = index.at(tab.swapped(i));
      const Rational off = tab.row_of(i + 1) > tab.row_of(i) ? Rational(1) : 1 - inv * inv;
      m(partner, t) = off;
      columns[t].emplace_back(partner, off);
    }
    generators_.push_back(std::move(m));
    generator_columns_.push_back(std::move(columns));
  }
}

RationalMatrix SeminormalRepresentation::right_multiply_generator(const RationalMatrix& a,
                                                                  int i) const {
  const auto& columns = generator_columns_[i - 1];
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (const auto& [row, value] : columns[c])
      for (std::size_t r = 0; r < a.rows(); ++r) out(r, c) += a(r, row) * value;
  return out;
}

RationalMatrix SeminormalRepresentation::matrix_of(const Permutation& sigma) const {
  if (sigma.degree() != degree())
    throw DomainError("permutation degree differs from the representation degree");
  // Bubble sort the images: sigma s_{w1} ... s_{wr} = id, so
  // sigma = s_{wr} ... s_{w1}.
  std::vector<int> images = sigma.images();
  std::vector<int> word;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t j = 0; j + 1 < images.size(); ++j) {
      if (images[j] > images[j + 1]) {
        std::swap(images[j], images[j + 1]);
        word.push_back(static_cast<int>(j) + 1);
        swapped = true;
      }
    }
  }
  RationalMatrix out = RationalMatrix::identity(dimension());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = right_multiply_generator(out, *it);
  return out;
}

RationalMatrix SeminormalRepresentation::matrix_of(const GroupAlgebraElement& x) const {
  RationalMatrix out(dimension(), dimension());
  for (const auto& [sigma, c] : x.terms()) {
    const RationalMatrix m = matrix_of(sigma.restricted(degree()));
    for (std::size_t r = 0; r < dimension(); ++r)
      for (std::size_t col = 0; col < dimension(); ++col) out(r, col) += c * m(r, col);
  }
  return out;
}

Rational SeminormalRepresentation::character(const Permutation& sigma) const {
  return matrix_of(sigma).trace();
}

RationalMatrix SeminormalRepresentation::young_subgroup_sum(
    const std::vector<int>& block_lengths) const {
  RationalMatrix total = RationalMatrix::identity(dimension());
  int offset = 0;
  for (int block : block_lengths) {
    RationalMatrix block_sum = RationalMatrix::identity(dimension());
    for (int j = 2; j <= block; ++j) {
      // Sum over r of s_{o+j-1} s_{o+j-2} ... s_{o+j-r}, r = 0 .. j-1.
      RationalMatrix coset = RationalMatrix::identity(dimension());
      RationalMatrix coset_sum = coset;
      for (int r = 1; r < j; ++r) {
        coset = right_multiply_generator(coset, offset + j - r);
        coset_sum = coset_sum + coset;
      }
      block_sum = block_sum * coset_sum;
    }
    total = total * block_sum;
    offset += block;
  }
  if (offset != degree()) throw DomainError("block lengths must sum to the degree");
  return total;
}

SeminormalRepresentation build_seminormal(const Partition& lambda) {
  if (lambda.empty()) throw DomainError("shape must be nonempty");
  return SeminormalRepresentation(lambda);
}

Integer dimension(const Partition& lambda) { return hook_length_dimension(lambda); }

Rational character_of_element(const SeminormalRepresentation& rep,
                              const GroupAlgebraElement& x) {
  if (x.degree() < rep.degree())
    throw DomainError("element degree is smaller than the representation degree");
  // Traces are constant on conjugacy classes; take one per cycle type.
  std::map<Partition, Rational> trace_by_type;
  Rational sum = 0;
  for (const auto& [sigma, c] : x.terms()) {
    const Permutation restricted = sigma.restricted(rep.degree());
    const Partition type = restricted.cycle_type();
    auto it = trace_by_type.find(type);
    if (it == trace_by_type.end())
      it = trace_by_type.emplace(type, rep.matrix_of(restricted).trace()).first;
    sum += c * it->second;
  }
  return sum;
}

Rational character_of_element(const Partition& lambda, const GroupAlgebraElement& x) {
  return character_of_element(build_seminormal(lambda), x);
}

IdentityReport dimension_content_identity_check(const Partition& lambda) {
  const int k = lambda.size();
  IdentityReport report;

  // dim(lambda) * prod (X + c), coefficients low degree first.
  std::vector<Integer> lhs{dimension(lambda)};
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.parts()[i]; ++j) {
      const int content = j - i;
      std::vector<Integer> next(lhs.size() + 1, 0);
      for (std::size_t e = 0; e < lhs.size(); ++e) {
        next[e + 1] += lhs[e];
        next[e] += lhs[e] * content;
      }
      lhs = std::move(next);
    }
  }

  std::vector<Integer> rhs(static_cast<std::size_t>(k) + 1, 0);
  std::map<Partition, Integer> by_type;
  for_each_permutation(k, [&](const Permutation& sigma) {
    const Partition t = sigma.cycle_type();
    auto it = by_type.find(t);
    if (it == by_type.end()) it = by_type.emplace(t, character_oracle(lambda, t)).first;
    rhs[static_cast<std::size_t>(t.length())] += it->second;
  });

  report.passed = lhs == rhs;
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  return report;
}

}  // namespace symchar
