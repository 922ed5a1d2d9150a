#include <gtest/gtest.h>

#include <random>

#include "symchar/error.hpp"
#include "symchar/group_algebra.hpp"
#include "symchar/partition.hpp"

using namespace symchar;

namespace {

Permutation P(const char* text, int n) { return Permutation::parse(text, n); }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  return make_rational(num(rng), den(rng));
}

GroupAlgebraElement random_element(std::mt19937_64& rng, int n, int terms) {
  const auto perms = all_permutations(n);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  GroupAlgebraElement x(n);
  for (int t = 0; t < terms; ++t) x.add_term(perms[pick(rng)], random_rational(rng));
  return x;
}

}  // namespace

TEST(GroupAlgebra, Examples) {
  const auto id = GroupAlgebraElement::basis(Permutation::identity(2));
  const auto s = GroupAlgebraElement::basis(P("(1 2)", 2));
  const auto sum = id + s;
  const auto square = sum * sum;
  EXPECT_EQ(square, id * Rational(2) + s * Rational(2));

  // J_2 J_3 in S(3) = (1 2)(1 3) + (1 2)(2 3); both products are 3-cycles.
  const auto j2j3 = jucys_murphy(2, 3) * jucys_murphy(3, 3);
  EXPECT_EQ(class_component(j2j3, Partition({3})), 2);
  EXPECT_EQ(class_component(j2j3, Partition({1, 1, 1})), 0);
  EXPECT_EQ(j2j3.coefficient(P("(1 3 2)", 3)) + j2j3.coefficient(P("(1 2 3)", 3)), 2);
}

TEST(GroupAlgebra, DegreeMismatchThrows) {
  const auto a = GroupAlgebraElement::basis(Permutation::identity(2));
  const auto b = GroupAlgebraElement::basis(Permutation::identity(3));
  EXPECT_THROW(multiply(a, b), DomainError);
  EXPECT_THROW(a + b, DomainError);
  EXPECT_THROW(class_component(a, Partition({3})), DomainError);
  EXPECT_THROW(jucys_murphy(4, 3), DomainError);
  EXPECT_THROW(jucys_murphy(0, 3), DomainError);
}

TEST(GroupAlgebra, ZeroCoefficientsAreDropped) {
  auto x = GroupAlgebraElement::basis(P("(1 2)", 2), 3);
  x.add_term(P("(1 2)", 2), -3);
  EXPECT_TRUE(x.is_zero());
  EXPECT_TRUE((x * Rational(0)).is_zero());
}

TEST(GroupAlgebra, JucysMurphyShape) {
  EXPECT_TRUE(jucys_murphy(1, 4).is_zero());
  const auto j3 = jucys_murphy(3, 4);
  EXPECT_EQ(j3.terms().size(), 2u);
  EXPECT_EQ(j3.coefficient(P("(1 3)", 4)), 1);
  EXPECT_EQ(j3.coefficient(P("(2 3)", 4)), 1);
}

TEST(GroupAlgebra, JucysMurphyElementsCommute) {
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      const auto a = jucys_murphy(i, 6), b = jucys_murphy(j, 6);
      EXPECT_EQ(a * b, b * a) << i << "," << j;
    }
}

TEST(GroupAlgebra, AssociativeAndDistributive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    const auto a = random_element(rng, n, 4);
    const auto b = random_element(rng, n, 4);
    const auto c = random_element(rng, n, 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(GroupAlgebra, EmbeddingIsAHomomorphism) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_element(rng, 3, 3), b = random_element(rng, 3, 3);
    EXPECT_EQ((a * b).embedded(5), a.embedded(5) * b.embedded(5));
  }
}

TEST(GroupAlgebra, FactoredProductMatchesCombinatorialExpansion) {
  std::mt19937_64 rng(2008);
  for (int k = 1; k <= 6; ++k)
    for (int sample = 0; sample < (k <= 4 ? 20 : 4); ++sample) {
      std::vector<Rational> x;
      for (int i = 0; i < k; ++i) x.push_back(random_rational(rng));
      const int n = k + sample % 2;
      EXPECT_EQ(jm_factored_product(x, n), jm_combinatorial_expansion(x, n)) << "k=" << k;
    }
}

TEST(GroupAlgebra, CombinatorialExpansionSmallCase) {
  // X_1 (X_2 - J_2) = X_1 X_2 id - X_1 (1 2).
  const std::vector<Rational> x{Rational(2), Rational(5)};
  const auto e = jm_combinatorial_expansion(x, 2);
  EXPECT_EQ(e.coefficient(Permutation::identity(2)), 10);
  EXPECT_EQ(e.coefficient(P("(1 2)", 2)), -2);
}

TEST(GroupAlgebra, TruncatedIndexSumIsExact) {
  for (int k = 1; k <= 3; ++k)
    for (int n = k; n <= 5; ++n)
      for (const auto& nu : partitions_of(n)) {
        EXPECT_EQ(build_S_k_nu(k, nu), build_S_k_nu(k, nu, nu.length() + 2))
            << "k=" << k << " nu=" << nu.to_string();
      }
}

TEST(GroupAlgebra, SknuRequiresEnoughPoints) {
  EXPECT_THROW(build_S_k_nu(4, Partition({2, 1})), DomainError);
}

TEST(GroupAlgebra, SknuSmallCase) {
  // k = 1: the only index sequences are (i), giving sum_i nu_i id = n id.
  const auto s = build_S_k_nu(1, Partition({3, 2}));
  EXPECT_EQ(s, GroupAlgebraElement::scalar(5, 5));
}

TEST(GroupAlgebra, SerializeIsCanonical) {
  auto x = GroupAlgebraElement::basis(P("(2 3)", 3), make_rational(2, 4));
  x.add_term(Permutation::identity(3), -3);
  const auto s = x.serialize();
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (std::pair<std::string, std::string>{"id", "-3"}));
  EXPECT_EQ(s[1], (std::pair<std::string, std::string>{"(2 3)", "1/2"}));
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_THROW(parse_rational("4/-2"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(make_rational(1, 0), DomainError);
}
