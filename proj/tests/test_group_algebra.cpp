#include <gtest/gtest.h>

#include <random>

#include "kint/group_algebra.hpp"
#include "kint/spectrum.hpp"

using kint::CosetLabel;
using kint::GroupFunction;
using kint::Partition;
using kint::Permutation;
using kint::Rational;

namespace {

const kint::CharacterTable& table(int n) { return *kint::shared_character_table(n); }

GroupFunction random_function(int n, std::mt19937& rng, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 4);
  auto f = GroupFunction::zero(n);
  for (auto& v : f.values) v = kint::ratio(num(rng), den(rng));
  return f;
}

GroupFunction delta_identity(int n) {
  auto f = GroupFunction::zero(n);
  f.values[0] = 1;
  return f;
}

GroupFunction sign_function(int n) {
  auto f = GroupFunction::zero(n);
  for (const auto& p : kint::all_permutations(n)) f.at(p) = p.is_even() ? 1 : -1;
  return f;
}

std::vector<std::string> names(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST(GroupAlgebra, DeltaConvolution) {
  std::mt19937 rng(1);
  for (int n = 1; n <= 5; ++n) {
    auto g = random_function(n, rng);
    EXPECT_EQ(kint::convolve(delta_identity(n), g), kint::ratio(1, kint::factorial(n)) * g);
  }
}

TEST(GroupAlgebra, IndicatorTimesConstant) {
  auto x = GroupFunction::zero(4);
  int size = 0;
  for (const auto& p : kint::all_permutations(4))
    if (p.fixed_points() == 0) x.at(p) = 1, ++size;
  auto c = kint::convolve(x, GroupFunction::constant(4, 1));
  EXPECT_EQ(c, GroupFunction::constant(4, kint::ratio(size, 24)));
}

TEST(GroupAlgebra, CayleyMatrixIsConvolution) {
  std::mt19937 rng(2);
  for (int n = 3; n <= 5; ++n) {
    kint::WeightedClassCombo combo{n, 1, {}};
    auto x = GroupFunction::zero(n);
    for (const auto& cls : kint::fpf_classes(n, 1)) combo.terms.emplace_back(cls, 1);
    for (const auto& p : kint::all_permutations(n))
      if (p.fixed_points() == 0) x.at(p) = 1;
    const auto a = kint::explicit_pseudo_adjacency(combo);
    auto f = random_function(n, rng);
    auto rhs = kint::Rational(kint::factorial(n)) * kint::convolve(x, f);
    for (std::size_t s = 0; s < f.values.size(); ++s) {
      Rational v = 0;
      for (std::size_t t = 0; t < f.values.size(); ++t) v += a(s, t) * f.values[t];
      EXPECT_EQ(v, rhs.values[s]);
    }
  }
}

TEST(GroupAlgebra, ConvolutionIsAssociative) {
  std::mt19937 rng(3);
  for (int n = 2; n <= 4; ++n) {
    auto f = random_function(n, rng), g = random_function(n, rng), h = random_function(n, rng);
    EXPECT_EQ(kint::convolve(kint::convolve(f, g), h), kint::convolve(f, kint::convolve(g, h)));
  }
}

TEST(GroupAlgebra, ProjectionExamples) {
  for (int n = 2; n <= 6; ++n) {
    auto c = GroupFunction::constant(n, 3);
    EXPECT_EQ(names(kint::fourier_support(c, table(n))), std::vector<std::string>{Partition({n}).to_string()});
    EXPECT_EQ(kint::isotypic_project(c, Partition({n}), table(n)), c);
    auto s = sign_function(n);
    EXPECT_EQ(kint::isotypic_project(s, kint::transpose(Partition({n})), table(n)), s);
  }
  auto t = kint::coset_indicator({{0}, {0}}, 4);
  EXPECT_EQ(names(kint::fourier_support(t, table(4))), (std::vector<std::string>{"4", "3+1"}));
  auto t5 = kint::coset_indicator({{2}, {4}}, 5);
  EXPECT_EQ(names(kint::fourier_support(t5, table(5))), (std::vector<std::string>{"5", "4+1"}));
}

TEST(GroupAlgebra, DeltaHasFullSupport) {
  for (int n = 1; n <= 5; ++n) {
    const auto d = delta_identity(n);
    EXPECT_EQ(kint::fourier_support(d, table(n)).size(), table(n).size());
    for (const auto& lambda : table(n).order()) {
      const auto dim = kint::dim_irrep(lambda);
      EXPECT_EQ(kint::isotypic_project(d, lambda, table(n)).values[0], kint::ratio(dim * dim, kint::factorial(n)));
    }
  }
}

TEST(GroupAlgebra, ProjectionsDecomposeAndAreIdempotent) {
  std::mt19937 rng(4);
  for (int n = 2; n <= 5; ++n) {
    auto f = random_function(n, rng);
    auto total = GroupFunction::zero(n);
    for (const auto& lambda : table(n).order()) {
      auto p = kint::isotypic_project(f, lambda, table(n));
      EXPECT_EQ(kint::isotypic_project(p, lambda, table(n)), p);
      total = total + p;
    }
    EXPECT_EQ(total, f);
  }
}

TEST(GroupAlgebra, Parseval) {
  std::mt19937 rng(5);
  for (int n = 2; n <= 6; ++n) {
    auto f = random_function(n, rng);
    Rational s = 0;
    for (const auto& lambda : table(n).order()) {
      auto p = kint::isotypic_project(f, lambda, table(n));
      s += kint::inner(p, p);
    }
    EXPECT_EQ(s, kint::inner(f, f));
  }
}

TEST(GroupAlgebra, ProjectionsAreOrthogonal) {
  std::mt19937 rng(6);
  for (int n = 2; n <= 5; ++n) {
    auto f = random_function(n, rng), g = random_function(n, rng);
    const auto& order = table(n).order();
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = 0; j < order.size(); ++j)
        if (i != j)
          EXPECT_EQ(kint::inner(kint::isotypic_project(f, order[i], table(n)),
                                kint::isotypic_project(g, order[j], table(n))),
                    0);
  }
}

TEST(GroupAlgebra, CosetIndicators) {
  EXPECT_EQ(kint::inner(kint::coset_indicator({{0}, {0}}, 4), GroupFunction::constant(4, 1)), 6);
  auto a = kint::coset_indicator({{0, 1}, {0, 1}}, 4);
  auto b = kint::coset_indicator({{0, 1}, {1, 0}}, 4);
  EXPECT_EQ(kint::inner(a, GroupFunction::constant(4, 1)), 2);
  EXPECT_EQ(kint::inner(b, GroupFunction::constant(4, 1)), 2);
  EXPECT_EQ(kint::inner(a, b), 0);
  EXPECT_THROW(kint::coset_indicator({{0, 0}, {1, 2}}, 4), kint::InvalidInput);
  EXPECT_THROW(kint::coset_indicator({{0, 1, 2, 3}, {0, 1, 2, 3}}, 4), kint::InvalidInput);
}

TEST(GroupAlgebra, VkMembership) {
  for (int n = 3; n <= 5; ++n)
    for (int k = 1; k < n - 1 && k <= 2; ++k) {
      const auto tuples = kint::ordered_tuples(n, k);
      for (std::size_t i = 0; i < tuples.size(); i += 3) {
        const CosetLabel label{tuples[i], tuples[(i * 7 + 1) % tuples.size()]};
        EXPECT_TRUE(kint::is_in_vk(kint::coset_indicator(label, n), k, table(n)));
      }
      EXPECT_FALSE(kint::is_in_vk(sign_function(n), k, table(n)));
    }
  auto sum = kint::coset_indicator({{0}, {0}}, 5) + kint::coset_indicator({{0}, {1}}, 5);
  EXPECT_TRUE(kint::is_in_vk(sum, 1, table(5)));
}

TEST(GroupAlgebra, DoubleTranslate) {
  std::mt19937 rng(7);
  const int n = 4;
  auto f = random_function(n, rng);
  EXPECT_EQ(kint::double_translate(f, Permutation::identity(n), Permutation::identity(n)), f);
  const auto l = Permutation::from_one_based({2, 3, 1, 4}), r = Permutation::from_one_based({4, 3, 2, 1});
  auto t = kint::double_translate(kint::coset_indicator({{0, 1}, {2, 3}}, n), l, r);
  // a translate of a coset is a coset: (n-2)! ones and of the form T{a->b}
  EXPECT_EQ(kint::inner(t, GroupFunction::constant(n, 1)), 2);
  bool found = false;
  for (const auto& a : kint::ordered_tuples(n, 2))
    for (const auto& b : kint::ordered_tuples(n, 2)) found = found || kint::coset_indicator({a, b}, n) == t;
  EXPECT_TRUE(found);
  // a random member of V_1 stays in V_1
  auto g = kint::isotypic_project(f, Partition({4}), table(n)) + kint::isotypic_project(f, Partition({3, 1}), table(n));
  ASSERT_TRUE(kint::is_in_vk(g, 1, table(n)));
  EXPECT_TRUE(kint::is_in_vk(kint::double_translate(g, l, r), 1, table(n)));
  EXPECT_FALSE(kint::is_in_vk(f, 1, table(n)));
}

TEST(GroupAlgebra, SpanRank) {
  auto r41 = kint::coset_span_rank(4, 1);
  EXPECT_EQ(r41.rank, 10u);
  EXPECT_TRUE(r41.exact);
  EXPECT_EQ(kint::coset_span_rank(5, 1).rank, 17u);
  EXPECT_EQ(kint::coset_span_rank(5, 2).rank, 78u);
  auto r61 = kint::coset_span_rank(6, 1);
  EXPECT_EQ(r61.rank, 26u);
  EXPECT_FALSE(r61.exact);
  for (int n = 3; n <= 5; ++n)
    for (int k = 1; k < n; ++k) EXPECT_TRUE(kint::coset_span_rank(n, k).matches()) << n << "," << k;
  EXPECT_TRUE(kint::coset_span_rank(6, 2).matches());
  EXPECT_THROW(kint::coset_span_rank(7, 1), kint::InvalidInput);
}

TEST(GroupAlgebra, ProjectionRankIsVkDimension) {
  for (int n = 3; n <= 5; ++n)
    for (int k = 1; k <= 2 && k < n; ++k) {
      const Partition hook = kint::hook_partition(n, k);
      const std::size_t size = kint::all_permutations(n).size();
      kint::Matrix<Rational> m(size, size);
      for (std::size_t i = 0; i < size; ++i) {
        auto e = GroupFunction::zero(n);
        e.values[i] = 1;
        auto p = GroupFunction::zero(n);
        for (const auto& lambda : table(n).order())
          if (kint::dominates(lambda, hook)) p = p + kint::isotypic_project(e, lambda, table(n));
        for (std::size_t j = 0; j < size; ++j) m(i, j) = p.values[j];
      }
      EXPECT_EQ(kint::Integer(static_cast<unsigned long>(kint::rank(m))), kint::vk_dimension(n, k));
      EXPECT_EQ(kint::Integer(static_cast<unsigned long>(kint::coset_span_rank(n, k).rank)), kint::vk_dimension(n, k));
    }
}

TEST(GroupAlgebra, Caps) {
  EXPECT_THROW(GroupFunction::zero(8), kint::InvalidInput);
  GroupFunction bad{3, std::vector<Rational>(5)};
  EXPECT_THROW(kint::convolve(bad, bad), kint::InvalidInput);
}

TEST(GroupAlgebra, SupportAgreesWithFullDecomposition) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(-2, 2), sparse(0, 3);
  for (int n = 3; n <= 5; ++n) {
    const auto& t = *kint::shared_character_table(n);
    for (int trial = 0; trial < 10; ++trial) {
      auto f = GroupFunction::zero(n);
      for (auto& v : f.values)
        if (sparse(rng) == 0) v = val(rng);
      const auto parts = kint::isotypic_decomposition(f, t);
      std::vector<kint::Partition> expect;
      for (std::size_t i = 0; i < parts.size(); ++i)
        if (!kint::is_zero(parts[i])) expect.push_back(t.order()[i]);
      EXPECT_EQ(kint::fourier_support(f, t), expect);
    }
  }
}
