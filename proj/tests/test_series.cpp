#include <gtest/gtest.h>

#include "lbs/io.hpp"
#include "lbs/series.hpp"
#include "test_util.hpp"

using namespace lbs;
using namespace testutil;

namespace {

CharacterMap from_terms(std::size_t order, std::initializer_list<Term> terms, const Rational& empty = 0) {
  CharacterMap a(order, empty);
  for (const auto& t : terms) a.set(F(t.w), t.c);
  return a;
}

}  // namespace

TEST(Series, SeriesOf) {
  EXPECT_EQ(series_of(delta(F("[]"), 3)).value, lc({{1, "[]"}}));
  auto remark = from_terms(3, {{1, "[[]] []"}, {-1, "[] [[]]"}});
  EXPECT_TRUE(is_logarithmic(remark));
  EXPECT_EQ(series_of(remark).value, lc({{1, "[[]] []"}, {-1, "[] [[]]"}}));
  EXPECT_EQ(character_of(series_of(remark)), remark);
  std::mt19937 rng(2);
  auto alpha = logarithmic_from(random_character(4, rng, 4));
  EXPECT_TRUE(is_primitive_shuffle(series_of(alpha).value, 4));
}

TEST(Series, AAlphaExamples) {
  const auto id = delta(F("[]"), 4);
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& w : enumerate_ordered_forests(n)) EXPECT_EQ(a_alpha(id, w).value, ForestComb(w));
  auto alpha = from_terms(3, {{1, "[]"}, {5, "[[]]"}});
  const ForestComb g = lc({{1, "[]"}, {5, "[[]]"}});
  EXPECT_EQ(a_alpha(alpha, F("[[]]")).value, truncate(left_graft(g, g), 3));
  EXPECT_EQ(a_alpha(alpha, F("[[]]")).value, lc({{1, "[[]]"}, {5, "[[][]]"}, {10, "[[[]]]"}}));
  EXPECT_EQ(a_alpha(alpha, F("[] []")).value, truncate(concat(g, g), 3));
  EXPECT_THROW(a_alpha(from_terms(3, {{1, "[] []"}}), F("[]")), std::invalid_argument);
}

TEST(Series, AAlphaMorphismProperties) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    auto alpha = logarithmic_from(random_character(3, rng, 3));
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& w : enumerate_ordered_forests(n)) {
        const ForestComb a = a_alpha(alpha, w).value;
        Tensor2<OrderedForest, OrderedForest> rhs;
        for (const auto& [p, c] : delta_shuffle(w))
          for (const auto& [x, s] : a_alpha(alpha, p.first).value)
            for (const auto& [y, t] : a_alpha(alpha, p.second).value)
              if (x.vertex_count() + y.vertex_count() <= 3) rhs.add({x, y}, c * s * t);
        EXPECT_EQ(delta_shuffle(a), rhs) << to_string(w);
        const LiePoly p = lie_projection(w);
        EXPECT_TRUE(is_primitive_shuffle(a_alpha(alpha, p).value, 3)) << to_string(w);
      }
    for (std::size_t n1 = 1; n1 <= 2; ++n1)
      for (const auto& a : enumerate_ordered_forests(n1))
        for (const auto& b : enumerate_ordered_forests(3 - n1))
          EXPECT_EQ(a_alpha(alpha, shuffle(a, b)).value,
                    truncate(shuffle(a_alpha(alpha, a).value, a_alpha(alpha, b).value), 3));
  }
}

TEST(Series, AAlphaDaggerExamples) {
  const auto id = delta(F("[]"), 4);
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& w : enumerate_ordered_forests(n)) EXPECT_EQ(a_alpha_dagger(id, w), ForestComb(w));
  auto alpha = from_terms(3, {{3, "[]"}, {7, "[[]]"}});
  EXPECT_EQ(a_alpha_dagger(alpha, F("[]")), lc({{3, "[]"}}));
  EXPECT_EQ(a_alpha_dagger(alpha, F("[[]]")), lc({{9, "[[]]"}, {7, "[]"}}));
}

TEST(Series, Adjoint) {
  EXPECT_TRUE(check_adjoint(from_terms(2, {{1, "[]"}, {1, "[[]]"}}), 2));
  EXPECT_TRUE(check_adjoint(delta(F("[]"), 3), 3));
  std::mt19937 rng(9);
  EXPECT_TRUE(check_adjoint(logarithmic_from(random_character(3, rng, 3)), 3));
}

TEST(Series, ComposeLB) {
  std::mt19937 rng(4);
  auto a = random_character(4, rng, 4, 2);
  auto b = random_character(4, rng, 4, 3);
  auto c = random_character(4, rng, 4, -1);
  EXPECT_EQ(compose_LB(counit_character(4), a), a);
  EXPECT_EQ(compose_LB(a, counit_character(4)), a);
  EXPECT_EQ(compose_LB(compose_LB(a, b), c), compose_LB(a, compose_LB(b, c)));
  EXPECT_EQ(compose_LB(b, a)(F("[]")), b.empty_value() * a(F("[]")) + b(F("[]")) * a.empty_value());
  auto e1 = exponential_from(logarithmic_from(random_character(4, rng, 4)));
  auto e2 = exponential_from(logarithmic_from(random_character(4, rng, 4)));
  EXPECT_TRUE(is_exponential(compose_LB(e1, e2)));
  EXPECT_THROW(compose_LB(a, counit_character(3)), std::invalid_argument);
}

TEST(Series, SubstitutionTheorem) {
  std::mt19937 rng(12);
  EXPECT_EQ(substitute_LB(delta(F("[]"), 4), random_character(4, rng, 4, 1)).order(), 4u);
  auto beta = random_character(4, rng, 4, 1);
  EXPECT_EQ(substitute_LB(delta(F("[]"), 4), beta), beta);
  for (int trial = 0; trial < 3; ++trial) {
    auto alpha = logarithmic_from(random_character(4, rng, 3));
    EXPECT_TRUE(check_substitution_theorem(alpha, random_character(4, rng, 4, 1), 4));
  }
  EXPECT_THROW(substitute_LB(from_terms(4, {{1, "[] []"}}), beta), std::invalid_argument);
}

TEST(Series, Automorphism) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 2; ++trial) {
    auto alpha = logarithmic_from(random_character(4, rng, 3));
    auto beta = exponential_from(logarithmic_from(random_character(4, rng, 4)));
    auto gamma = exponential_from(logarithmic_from(random_character(4, rng, 4)));
    EXPECT_TRUE(check_automorphism(alpha, beta, gamma));
    EXPECT_TRUE(check_automorphism(alpha, random_character(4, rng, 4, 1), random_character(4, rng, 4, 2)));
  }
}
