#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "symchar/character.hpp"
#include "symchar/error.hpp"
#include "symchar/shifted_schur.hpp"
#include "symchar/stanley.hpp"

using namespace symchar;

namespace {

Permutation P(const char* text, int n) { return Permutation::parse(text, n); }

std::vector<Rational> R(std::initializer_list<int> values) {
  return std::vector<Rational>(values.begin(), values.end());
}

std::string print(const Polynomial& f, int m) {
  return f.to_string([m](int index) { return stanley_variable_name(index, m); });
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  const auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  const auto one = Polynomial::constant(2, 1);
  const auto f = (x + one) * (x - one);
  EXPECT_EQ(f, x * x - one);
  EXPECT_EQ(f.total_degree(), 2);
  EXPECT_EQ(Polynomial(2).total_degree(), -1);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(f.evaluate(R({3, 100})), 8);
  EXPECT_EQ((x * y).coefficient({1, 1}), 1);
  EXPECT_THROW(x.evaluate(R({1})), DomainError);
}

TEST(Polynomial, SubstituteAndRemap) {
  const auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  EXPECT_EQ((x * x * y).substitute(0, x + y), (x + y) * (x + y) * y);
  // Merge both variables onto one.
  const auto g = (x * y + x).remap(1, {0, 0});
  const auto z = Polynomial::variable(1, 0);
  EXPECT_EQ(g, z * z + z);
}

TEST(Polynomial, Printing) {
  const auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  const auto c = Polynomial::constant(2, 3);
  const auto name = [](int i) { return std::string(i == 0 ? "a" : "b"); };
  EXPECT_EQ((x * x * y - c * y + c).to_string(name), "a^2*b - 3*b + 3");
  EXPECT_EQ(Polynomial(2).to_string(name), "0");
  EXPECT_EQ((Polynomial(2) - x).to_string(name), "-a");
}

TEST(StanleyNumeric, Examples) {
  EXPECT_EQ(stanley_rhs_numeric(Permutation::identity(1), R({4}), R({5})), 20);
  EXPECT_EQ(stanley_rhs_numeric(P("(1 2)", 2), R({2}), R({3})), 6);
  EXPECT_EQ(stanley_rhs_numeric(P("(1 2)", 2), R({2}), R({2})), 0);
  EXPECT_THROW(stanley_rhs_numeric(Permutation::identity(1), R({1, 2}), R({1})), DomainError);
  EXPECT_THROW(stanley_rhs_numeric(Permutation::identity(1), R({}), R({})), DomainError);
}

TEST(StanleyPolynomial, Examples) {
  EXPECT_EQ(print(stanley_rhs_polynomial(Permutation::identity(1), 1), 1), "p1*q1");
  EXPECT_EQ(print(stanley_rhs_polynomial(P("(1 2)", 2), 1), 1), "-p1^2*q1 + p1*q1^2");
  EXPECT_EQ(print(stanley_rhs_polynomial(Permutation::identity(2), 1), 1), "p1^2*q1^2 - p1*q1");
  EXPECT_EQ(print(stanley_rhs_polynomial(Permutation::identity(1), 2), 2), "p1*q1 + p2*q2");
}

TEST(StanleyPolynomial, MatchesBruteForceExpansion) {
  for (int k = 1; k <= 4; ++k)
    for (int m = 1; m <= 3; ++m)
      for (const auto& mu : all_permutations(k))
        EXPECT_EQ(stanley_rhs_polynomial(mu, m), symchar::testing::brute_stanley_polynomial(mu, m))
            << mu.to_string() << " m=" << m;
}

TEST(StanleyPolynomial, AgreesWithNumericRouteAtRandomPoints) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(-15, 15), den(1, 6);
  for (int k = 1; k <= 4; ++k)
    for (const auto& mu : cycle_type_representatives(k))
      for (int m = 1; m <= 3; ++m) {
        const auto f = stanley_rhs_polynomial(mu, m);
        for (int sample = 0; sample < 10; ++sample) {
          std::vector<Rational> point;
          for (int j = 0; j < 2 * m; ++j) point.push_back(make_rational(num(rng), den(rng)));
          const std::vector<Rational> p(point.begin(), point.begin() + m);
          const std::vector<Rational> q(point.begin() + m, point.end());
          EXPECT_EQ(f.evaluate(point), stanley_rhs_numeric(mu, p, q));
        }
      }
}

TEST(StanleyPolynomial, DegreesComeFromCycleCounts) {
  for (int k = 1; k <= 4; ++k)
    for (const auto& mu : all_permutations(k)) {
      std::set<std::pair<int, int>> allowed;
      for (const auto& sigma : all_permutations(k))
        allowed.emplace(sigma.cycle_count(), (sigma * mu).cycle_count());
      const int m = 2;
      const auto f = stanley_rhs_polynomial(mu, m);
      for (const auto& [e, c] : f.terms()) {
        const int pdeg = e[0] + e[1], qdeg = e[2] + e[3];
        EXPECT_TRUE(allowed.count({pdeg, qdeg})) << mu.to_string();
      }
    }
}

TEST(StanleyPolynomial, ThreadCountDoesNotChangeResult) {
  const auto mu = P("(1 2 3)(4 5)", 5);
  EXPECT_EQ(stanley_rhs_polynomial(mu, 2, 1), stanley_rhs_polynomial(mu, 2, 4));
  EXPECT_EQ(stanley_rhs_numeric(mu, R({2, 1}), R({3, 2}), 1),
            stanley_rhs_numeric(mu, R({2, 1}), R({3, 2}), 3));
}

TEST(CharacterFormula, Examples) {
  const std::vector<int> p2{2}, q3{3};
  const auto a = verify_main_theorem(P("(1 2)", 2), p2, q3);
  EXPECT_TRUE(a.agree);
  EXPECT_EQ(a.shape, Partition({3, 3}));
  EXPECT_EQ(a.via_stanley, 6);

  const std::vector<int> p11{1, 1}, q21{2, 1};
  const auto b = verify_main_theorem(P("(1 2 3)", 3), p11, q21);
  EXPECT_TRUE(b.agree);
  // 3! * chi_(2,1)((1 2 3)) / 2 = 6 * (-1) / 2.
  EXPECT_EQ(b.via_definition, -3);

  for (int k = 1; k <= 4; ++k) {
    const auto r = verify_main_theorem(Permutation::identity(k), p2, q3);
    EXPECT_TRUE(r.agree);
    EXPECT_EQ(r.via_definition, falling_factorial(6, k));
  }
}

TEST(CharacterFormula, Errors) {
  const std::vector<int> p{1}, q{1}, bad_q{1, 2}, p2{1, 1};
  EXPECT_THROW(verify_main_theorem(Permutation::identity(2), p, q), DomainError);
  EXPECT_THROW(verify_main_theorem(Permutation::identity(1), p2, bad_q), DomainError);
}

TEST(CharacterFormula, RectangleTransposition) {
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      if (p * q < 2) continue;
      EXPECT_EQ(normalized_character(build_pq_partition(std::vector<int>{p}, std::vector<int>{q}),
                                     P("(1 2)", 2)),
                p * q * (q - p));
    }
}

TEST(FunctionalEquation, Examples) {
  const auto a = verify_functional_equation(Permutation::identity(1), 2, 1);
  EXPECT_TRUE(a.passed);
  const auto p1 = Polynomial::variable(4, 0), p2 = Polynomial::variable(4, 1);
  const auto q1 = Polynomial::variable(4, 2);
  EXPECT_EQ(a.restricted, (p1 + p2) * q1);
  EXPECT_TRUE(verify_functional_equation(P("(1 2)", 2), 2, 1).passed);
  EXPECT_TRUE(verify_functional_equation(P("(1 2 3)", 3), 2, 1).passed);
  EXPECT_THROW(verify_functional_equation(P("(1 2)", 2), 1, 1), DomainError);
  EXPECT_THROW(verify_functional_equation(P("(1 2)", 2), 3, 3), DomainError);
}

TEST(FunctionalEquation, HoldsWithSampleGrid) {
  std::vector<std::vector<Rational>> grid;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      grid.push_back({Rational(a), Rational(b), make_rational(1, 2), Rational(3), Rational(3), Rational(1)});
  for (int k = 1; k <= 3; ++k)
    for (const auto& mu : all_permutations(k))
      for (int i = 1; i <= 2; ++i) {
        const auto r = verify_functional_equation(mu, 3, i, grid);
        EXPECT_TRUE(r.passed) << mu.to_string() << " i=" << i;
        EXPECT_TRUE(r.failing_points.empty());
      }
}
