#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "symchar/character.hpp"
#include "symchar/error.hpp"
#include "symchar/group_algebra.hpp"
#include "symchar/representation.hpp"
#include "symchar/shifted_schur.hpp"

using namespace symchar;

namespace {

std::vector<Rational> R(std::initializer_list<int> values) {
  return std::vector<Rational>(values.begin(), values.end());
}

std::vector<Rational> as_rationals(const Partition& nu) {
  return std::vector<Rational>(nu.parts().begin(), nu.parts().end());
}

}  // namespace

TEST(FallingFactorial, Examples) {
  EXPECT_EQ(falling_factorial(5, 2), 20);
  EXPECT_EQ(falling_factorial(make_rational(7, 3), 0), 1);
  EXPECT_EQ(falling_factorial(3, 4), 0);
  EXPECT_EQ(falling_factorial(make_rational(1, 2), 2), make_rational(-1, 4));
}

TEST(ShiftedSchurDeterminant, Examples) {
  EXPECT_EQ(shifted_schur_determinant(Partition({1}), R({2, 1})), 3);
  EXPECT_EQ(shifted_schur_determinant(Partition({1}), R({7})), 7);
  EXPECT_EQ(shifted_schur_determinant(Partition({2}), R({2})), 2);
  EXPECT_EQ(shifted_schur_determinant(Partition({1}), std::vector<Rational>{}), 0);
  EXPECT_EQ(shifted_schur_determinant(Partition(), R({4, 1})), 1);
}

TEST(ShiftedSchurDeterminant, SingularDenominator) {
  // x_1 + 1 = x_2 + 0.
  EXPECT_THROW(shifted_schur_determinant(Partition({1}), R({1, 2})), SingularDenominator);
  EXPECT_THROW(shifted_schur_determinant(Partition({1}),
                                         std::vector<Rational>{make_rational(1, 2), make_rational(3, 2)}),
               SingularDenominator);
}

TEST(ShiftedSchurDeterminant, Stability) {
  EXPECT_TRUE(stability_check(Partition({1}), R({2, 1})).passed);
  EXPECT_TRUE(stability_check(Partition({2, 1}), R({3, 2})).passed);
  const auto empty = stability_check(Partition({1}), std::vector<Rational>{});
  EXPECT_TRUE(empty.passed);
  EXPECT_EQ(empty.with_zero, 0);
  for (int n = 1; n <= 6; ++n)
    for (const auto& nu : partitions_of(n))
      for (int k = 1; k <= 4; ++k)
        for (const auto& lambda : partitions_of(k)) {
          auto x = as_rationals(nu);
          const Rational base = shifted_schur_determinant(lambda, x);
          for (int zeros = 1; zeros <= 3; ++zeros) {
            x.push_back(0);
            EXPECT_EQ(shifted_schur_determinant(lambda, x), base);
          }
        }
}

TEST(ShiftedSchurDeterminant, SymmetricInShiftedVariables) {
  // s*(x) depends symmetrically on y_i = x_i - i.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-20, 20);
  for (int trial = 0; trial < 40; ++trial) {
    const int l = 2 + trial % 3;
    std::vector<Rational> y;
    for (int i = 0; i < l; ++i) y.push_back(make_rational(num(rng), 7));
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
    const auto x_of = [&](const std::vector<Rational>& ys) {
      std::vector<Rational> x;
      for (std::size_t i = 0; i < ys.size(); ++i) x.push_back(ys[i] + static_cast<int>(i + 1));
      return x;
    };
    const auto lambda = partitions_of(3)[trial % 3];
    const Rational base = shifted_schur_determinant(lambda, x_of(y));
    auto shuffled = y;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(shifted_schur_determinant(lambda, x_of(shuffled)), base);
  }
}

TEST(ShiftedSchurDeterminant, MatchesReverseTableauFormula) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-12, 12);
  for (int k = 0; k <= 4; ++k)
    for (const auto& lambda : partitions_of(k))
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<Rational> x;
        for (int i = 0; i < 4; ++i) x.push_back(make_rational(num(rng), 5));
        Rational expected = symchar::testing::reverse_tableau_shifted_schur(lambda, x);
        try {
          EXPECT_EQ(shifted_schur_determinant(lambda, x), expected) << lambda.to_string();
        } catch (const SingularDenominator&) {
        }
      }
}

TEST(ShiftedSchurDeterminant, SingleRowSingleVariable) {
  // One variable, one row: s*_(k)(n) = (n)_k.
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= 4; ++k)
      EXPECT_EQ(shifted_schur_determinant(k == 0 ? Partition() : Partition({k}), R({n})),
                falling_factorial(n, k));
}

TEST(ShiftedSchurCombinatorial, Examples) {
  EXPECT_EQ(shifted_schur_combinatorial(Partition({1}), Partition({4, 2, 1})), 7);
  EXPECT_EQ(shifted_schur_combinatorial(Partition({2}), Partition({2})), 2);
  EXPECT_EQ(shifted_schur_combinatorial(Partition({1, 1}), Partition({2})), 0);
}

TEST(ShiftedSchurGroupAlgebra, Examples) {
  EXPECT_EQ(shifted_schur_via_group_algebra(Partition({1}), Partition({3, 1})), 4);
  EXPECT_EQ(shifted_schur_via_group_algebra(Partition({2}), Partition({1, 1})), 0);
  // (n)_k dim(nu/lambda) / dim(nu) = 2 * 1 / 1.
  EXPECT_EQ(shifted_schur_via_group_algebra(Partition({1, 1}), Partition({1, 1})), 2);
  EXPECT_EQ(shifted_schur_via_group_algebra(Partition({2}), Partition({2})), 2);
  EXPECT_EQ(shifted_schur_via_group_algebra(Partition({1, 1}), Partition({2})), 0);
  EXPECT_THROW(shifted_schur_via_group_algebra(Partition({2, 1}), Partition({2})), DomainError);
  EXPECT_EQ(character_of_element(Partition({1, 1}), build_S_k_nu(2, Partition({1, 1}))), 2);
}

TEST(ShiftedSchur, ThreeRoutesAgree) {
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 6; ++n)
      for (const auto& nu : partitions_of(n)) {
        if (nu.length() > 4) continue;
        const bool algebra = n >= k;
        std::optional<GroupAlgebraElement> s;
        if (algebra) s = build_S_k_nu(k, nu);
        for (const auto& lambda : partitions_of(k)) {
          const Rational det = shifted_schur_determinant(lambda, nu);
          EXPECT_EQ(shifted_schur_combinatorial(lambda, nu), det)
              << lambda.to_string() << " " << nu.to_string();
          if (algebra) EXPECT_EQ(character_of_element(lambda, *s), det);
        }
      }
}

TEST(ShiftedSchurExpansion, MatchesNormalizedCharacter) {
  EXPECT_EQ(okounkov_olshanski_character(Partition({4}), Permutation::identity(1)), 4);
  EXPECT_EQ(okounkov_olshanski_character(Partition({2, 2}), Permutation::parse("(1 2)", 2)), 0);
  EXPECT_EQ(okounkov_olshanski_character(Partition({3, 3}), Permutation::parse("(1 2)", 2)), 6);
  for (int k = 1; k <= 4; ++k)
    for (int n = k; n <= 7; ++n)
      for (const auto& nu : partitions_of(n))
        for (const auto& mu : cycle_type_representatives(k))
          EXPECT_EQ(okounkov_olshanski_character(nu, mu), normalized_character(nu, mu))
              << nu.to_string() << " " << mu.to_string();
  EXPECT_THROW(okounkov_olshanski_character(Partition({1}), Permutation::identity(2)), DomainError);
}
