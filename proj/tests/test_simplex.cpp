#include <gtest/gtest.h>

#include "kint/simplex.hpp"

using kint::Matrix;
using kint::Rational;

namespace {

Matrix<Rational> make(std::size_t r, std::size_t c, std::initializer_list<int> v) {
  Matrix<Rational> m(r, c);
  auto it = v.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

TEST(Simplex, FeasibleStandardForm) {
  auto a = make(2, 3, {1, 1, 1, 1, -1, 0});
  std::vector<Rational> b{3, 1};
  auto r = kint::solve_feasibility(a, b);
  ASSERT_TRUE(std::holds_alternative<kint::FeasiblePoint>(r));
  const auto& x = std::get<kint::FeasiblePoint>(r).x;
  for (const auto& v : x) EXPECT_GE(v, 0);
  EXPECT_EQ(x[0] + x[1] + x[2], 3);
  EXPECT_EQ(x[0] - x[1], 1);
}

TEST(Simplex, InfeasibleStandardFormHasCertificate) {
  // x1 + x2 = 1 and x1 + x2 = 2 cannot both hold
  auto a = make(2, 2, {1, 1, 1, 1});
  std::vector<Rational> b{1, 2};
  auto r = kint::solve_feasibility(a, b);
  ASSERT_TRUE(std::holds_alternative<kint::FarkasCertificate>(r));
  EXPECT_TRUE(kint::verify_farkas(a, b, std::get<kint::FarkasCertificate>(r).y));
}

TEST(Simplex, NegativeRightHandSide) {
  // x >= 0 with -x = 2 is empty
  auto a = make(1, 1, {-1});
  std::vector<Rational> b{2};
  auto r = kint::solve_feasibility(a, b);
  ASSERT_TRUE(std::holds_alternative<kint::FarkasCertificate>(r));
  EXPECT_FALSE(kint::verify_farkas(a, b, {Rational(-1)}));
}

TEST(Simplex, MixedFeasibleWithNegativeSolution) {
  kint::MixedSystem s{make(1, 2, {1, 1}), {Rational(-3)}, make(1, 2, {1, -1}), {Rational(1)}};
  auto r = kint::solve_mixed(s);
  ASSERT_TRUE(std::holds_alternative<std::vector<Rational>>(r));
  const auto& x = std::get<std::vector<Rational>>(r);
  EXPECT_EQ(x[0] + x[1], -3);
  EXPECT_GE(x[0] - x[1], 1);
}

TEST(Simplex, MixedInfeasible) {
  kint::MixedSystem s{make(1, 2, {1, 1}), {Rational(1)}, make(1, 2, {1, 1}), {Rational(2)}};
  auto r = kint::solve_mixed(s);
  ASSERT_TRUE(std::holds_alternative<kint::MixedCertificate>(r));
  const auto& c = std::get<kint::MixedCertificate>(r);
  EXPECT_TRUE(kint::verify_mixed_certificate(s, c));
  kint::MixedCertificate bogus{{Rational(1)}, {Rational(-1)}};
  EXPECT_FALSE(kint::verify_mixed_certificate(s, bogus));
}

TEST(Simplex, DegenerateSystemTerminates) {
  // several redundant rows produce degenerate pivots
  auto a = make(4, 4, {1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1});
  std::vector<Rational> b{0, 0, 2, 2};
  auto r = kint::solve_feasibility(a, b);
  ASSERT_TRUE(std::holds_alternative<kint::FeasiblePoint>(r));
  const auto& x = std::get<kint::FeasiblePoint>(r).x;
  EXPECT_EQ(x[0], 0);
  EXPECT_EQ(x[2] + x[3], 2);
}
