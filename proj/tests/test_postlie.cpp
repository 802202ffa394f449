#include <gtest/gtest.h>

#include "lbs/io.hpp"
#include "lbs/linalg.hpp"
#include "lbs/postlie.hpp"
#include "test_util.hpp"

using namespace lbs;
using namespace testutil;

namespace {

// Leftmost attachment written out recursively on the tree structure.
LinComb<PlanarTree> graft_tree_oracle(const PlanarTree& a, const PlanarTree& b) {
  LinComb<PlanarTree> out;
  std::vector<PlanarTree> ch{a};
  ch.insert(ch.end(), b.children().begin(), b.children().end());
  out.add(PlanarTree(ch), 1);
  for (std::size_t i = 0; i < b.children().size(); ++i)
    for (const auto& [t, c] : graft_tree_oracle(a, b.children()[i])) {
      std::vector<PlanarTree> kids = b.children();
      kids[i] = t;
      out.add(PlanarTree(kids), c);
    }
  return out;
}

ForestComb graft_oracle(const ForestComb& x, const ForestComb& y);

// The two extension rules: τ⊸τ₂ω₂ = (τ⊸τ₂)ω₂ + τ₂(τ⊸ω₂) and
// τ₁ω₁⊸ω₂ = τ₁⊸(ω₁⊸ω₂) - (τ₁⊸ω₁)⊸ω₂.
ForestComb graft_oracle(const OrderedForest& a, const OrderedForest& b) {
  if (a.empty()) return ForestComb(b);
  if (a.size() == 1) {
    if (b.empty()) return {};
    OrderedForest head(b[0]);
    OrderedForest tail(std::vector<PlanarTree>(b.trees().begin() + 1, b.trees().end()));
    ForestComb out;
    for (const auto& [t, c] : graft_tree_oracle(a[0], b[0])) out.add(OrderedForest(t) * tail, c);
    out += concat(ForestComb(head), graft_oracle(ForestComb(a), ForestComb(tail)));
    return out;
  }
  ForestComb t1{OrderedForest(a[0])};
  ForestComb rest(OrderedForest(std::vector<PlanarTree>(a.trees().begin() + 1, a.trees().end())));
  return graft_oracle(t1, graft_oracle(rest, ForestComb(b))) - graft_oracle(graft_oracle(t1, rest), ForestComb(b));
}

ForestComb graft_oracle(const ForestComb& x, const ForestComb& y) {
  return bilinear(x, y, [](const OrderedForest& a, const OrderedForest& b) { return graft_oracle(a, b); });
}

std::vector<OrderedForest> forests_upto(std::size_t n, bool with_empty = true) {
  std::vector<OrderedForest> out;
  for (std::size_t k = with_empty ? 0 : 1; k <= n; ++k)
    for (const auto& w : enumerate_ordered_forests(k)) out.push_back(w);
  return out;
}

std::vector<LiePoly> lie_elements_upto3() {
  std::vector<LiePoly> out;
  std::vector<PlanarTree> trees;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_planar_trees(n)) trees.push_back(t);
  for (const auto& t : trees) out.push_back(tree_generator(t));
  for (const auto& a : trees)
    for (const auto& b : trees)
      if (a.vertex_count() + b.vertex_count() <= 3 && a < b)
        out.push_back(bracket(tree_generator(a), tree_generator(b)));
  return out;
}

}  // namespace

TEST(LeftGraft, Examples) {
  EXPECT_EQ(left_graft(lc({{1, "[]"}}), lc({{1, "[]"}})), lc({{1, "[[]]"}}));
  EXPECT_EQ(left_graft(lc({{1, "[[]]"}}), lc({{1, "[[]]"}})), lc({{1, "[[][[]]]"}, {1, "[[[[]]]]"}}));
  EXPECT_EQ(left_graft(lc({{1, "[[][]] [[]] [[][[][]]]"}}), lc({{1, "[]"}})),
            lc({{1, "[[[][[][]]][[]][[][]]]"}}));
}

TEST(LeftGraft, NewEdgeIsLeftmost) {
  auto r = left_graft(T("[[]]"), T("[]"));
  ASSERT_EQ(r.size(), 1u);
  auto t = r.begin()->first;
  EXPECT_EQ(t.children()[0].vertex_count(), 2u);
}

TEST(LeftGraft, AgreesWithExtensionRules) {
  for (const auto& a : forests_upto(3))
    for (const auto& b : forests_upto(3))
      EXPECT_EQ(left_graft(a, b), graft_oracle(a, b)) << to_string(a) << " ⊸ " << to_string(b);
}

TEST(BPlus, Examples) {
  EXPECT_EQ(b_plus(OrderedForest{}), bullet());
  EXPECT_EQ(b_plus(F("[[][]] [[]] [[][[][]]]")), T("[[[][[][]]][[]][[][]]]"));
  for (const auto& w : forests_upto(5)) {
    EXPECT_EQ(b_minus(b_plus(w)), w);
    EXPECT_EQ(left_graft(ForestComb(w), lc({{1, "[]"}})), ForestComb(OrderedForest(b_plus(w))));
  }
}

TEST(GrossmanLarson, Examples) {
  EXPECT_EQ(gl_product(F("[[][]]"), F("[] [[]]")),
            lc({{1, "[[][]] [] [[]]"}, {1, "[[[][]]] [[]]"}, {1, "[] [[][[][]]]"}, {1, "[] [[[[][]]]]"}}));
  EXPECT_EQ(gl_product(OrderedForest{}, F("[[]] []")), lc({{1, "[[]] []"}}));
  EXPECT_EQ(gl_product(F("[]"), F("[]")), lc({{1, "[] []"}, {1, "[[]]"}}));
  EXPECT_EQ(pairing(gl_product(F("[[][]]"), F("[] [[]]")), F("[[][]] [] [[]]")), 1);
}

TEST(GrossmanLarson, Associative) {
  auto small = forests_upto(2, false);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) {
        ForestComb A(a), B(b), C(c);
        EXPECT_EQ(gl_product(gl_product(A, B), C), gl_product(A, gl_product(B, C)));
      }
  auto three = enumerate_ordered_forests(3);
  for (std::size_t i = 0; i < three.size(); ++i) {
    ForestComb A(three[i]), B(three[(i + 1) % three.size()]), C(three[(i + 2) % three.size()]);
    EXPECT_EQ(gl_product(gl_product(A, B), C), gl_product(A, gl_product(B, C)));
  }
}

TEST(Shuffle, Examples) {
  EXPECT_EQ(shuffle(F("[] [[]]"), F("[[][]] [[[]]]")),
            lc({{1, "[] [[]] [[][]] [[[]]]"},
                {1, "[] [[][]] [[]] [[[]]]"},
                {1, "[[][]] [] [[]] [[[]]]"},
                {1, "[[][]] [] [[[]]] [[]]"},
                {1, "[] [[][]] [[[]]] [[]]"},
                {1, "[[][]] [[[]]] [] [[]]"}}));
  EXPECT_EQ(shuffle(F("[[]] []"), OrderedForest{}), lc({{1, "[[]] []"}}));
  EXPECT_EQ(shuffle(OrderedForest{}, F("[[]] []")), lc({{1, "[[]] []"}}));
  // The printed list has "[[]] ⊗ [] [[]] [[][]]"; the right leg can only be
  // the complement "[] [[][]]".
  EXPECT_EQ(delta_shuffle(F("[] [[]] [[][]]")),
            tt({{1, "[] [[]] [[][]]", "∅"},
                {1, "[] [[]]", "[[][]]"},
                {1, "[] [[][]]", "[[]]"},
                {1, "[[]] [[][]]", "[]"},
                {1, "[]", "[[]] [[][]]"},
                {1, "[[]]", "[] [[][]]"},
                {1, "[[][]]", "[] [[]]"},
                {1, "∅", "[] [[]] [[][]]"}}));
}

TEST(Shuffle, Bialgebra) {
  // Δ⧢ is dual to ⧢, so it is multiplicative for concatenation.
  auto mul = [](const OrderedForest& a, const OrderedForest& b) { return ForestComb(a * b); };
  for (const auto& a : forests_upto(3))
    for (const auto& b : forests_upto(3))
      EXPECT_EQ(delta_shuffle(a * b), tensor_product(delta_shuffle(a), delta_shuffle(b), mul, mul));
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& w : enumerate_ordered_forests(n))
      for (const auto& [p, c] : delta_shuffle(w)) EXPECT_EQ(shuffle(p.first, p.second).coeff(w), c);
}

TEST(Primitives, Examples) {
  EXPECT_TRUE(is_primitive_shuffle(lc({{1, "[[][[]]]"}}), 4));
  EXPECT_TRUE(is_primitive_shuffle(lc({{1, "[[]] []"}, {-1, "[] [[]]"}}), 3));
  EXPECT_FALSE(is_primitive_shuffle(lc({{1, "[] [[]]"}}), 3));
}

TEST(Primitives, LieSpanEqualsPrimitives) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto words = enumerate_ordered_forests(n);
    std::vector<Tensor2<OrderedForest, OrderedForest>> defect;
    for (const auto& w : words) {
      auto d = delta_shuffle(w);
      d.add({OrderedForest{}, w}, -1);
      d.add({w, OrderedForest{}}, -1);
      defect.push_back(d);
    }
    std::size_t primitive_dim = words.size() - rank(defect);
    // Left-normed brackets of trees span the Lie elements of degree n.
    std::vector<LiePoly> lie;
    for (const auto& w : words) {
      LiePoly x = tree_generator(w[0]);
      for (std::size_t i = 1; i < w.size(); ++i) x = bracket(x, tree_generator(w[i]));
      EXPECT_TRUE(is_primitive_shuffle(x, n));
      lie.push_back(x);
    }
    EXPECT_EQ(rank(lie), primitive_dim) << "degree " << n;
  }
}

TEST(LiePoly, Bracket) {
  auto a = tree_generator(bullet()), b = tree_generator(T("[[]]")), c = tree_generator(T("[[][]]"));
  EXPECT_EQ(bracket(a, b), lc({{1, "[] [[]]"}, {-1, "[[]] []"}}));
  EXPECT_TRUE(bracket(b, b).is_zero());
  EXPECT_TRUE((bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)).is_zero());
  EXPECT_EQ(parse_lie("{[], [[]]}"), bracket(a, b));
  EXPECT_EQ(parse_lie("{{•,[[]]},[[][]]}"), bracket(bracket(a, b), c));
}

TEST(LiePoly, GraftRules) {
  auto gens = lie_elements_upto3();
  for (const auto& x : gens)
    for (const auto& y : gens)
      for (const auto& z : gens) {
        EXPECT_EQ(lie_graft(x, bracket(y, z)), bracket(lie_graft(x, y), z) + bracket(y, lie_graft(x, z)));
        EXPECT_EQ(lie_graft(bracket(x, y), z), lie_graft(x, lie_graft(y, z)) - lie_graft(lie_graft(x, y), z) -
                                                   lie_graft(y, lie_graft(x, z)) + lie_graft(lie_graft(y, x), z));
      }
  auto dot = tree_generator(bullet());
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_planar_trees(n))
      EXPECT_TRUE(lie_graft(bracket(dot, dot), tree_generator(t)).is_zero());
  auto r = lie_graft(dot, bracket(dot, tree_generator(T("[[]]"))));
  EXPECT_EQ(r, bracket(tree_generator(T("[[]]")), tree_generator(T("[[]]"))) +
                   bracket(dot, lc({{1, "[[][]]"}, {1, "[[[]]]"}})));
  EXPECT_TRUE(is_primitive_shuffle(r, 4));
}

TEST(LiePoly, PostLieJacobi) {
  std::vector<LiePoly> gens;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_planar_trees(n)) gens.push_back(tree_generator(t));
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : gens) {
        auto j = postlie_bracket(a, postlie_bracket(b, c)) + postlie_bracket(b, postlie_bracket(c, a)) +
                 postlie_bracket(c, postlie_bracket(a, b));
        EXPECT_TRUE(j.is_zero());
      }
}

TEST(DAlgebra, Axioms) {
  auto lie = lie_elements_upto3();
  auto forests = forests_upto(3);
  for (const auto& a : forests) EXPECT_EQ(left_graft(ForestComb(OrderedForest{}), ForestComb(a)), ForestComb(a));
  for (const auto& x : lie)
    for (const auto& a : forests)
      for (const auto& b : forests) {
        ForestComb A(a), B(b);
        EXPECT_EQ(left_graft(x, concat(A, B)), concat(left_graft(x, A), B) + concat(A, left_graft(x, B)));
        EXPECT_EQ(left_graft(concat(x, A), B), left_graft(x, left_graft(A, B)) - left_graft(left_graft(x, A), B));
      }
}

TEST(DeltaN, Examples) {
  EXPECT_EQ(delta_N(F("[[][[]][]]")), tt({{1, "∅", "[[][[]][]]"},
                                          {1, "[]", "[[][[]]]"},
                                          {1, "[]", "[[][][]]"},
                                          {2, "[] []", "[[][]]"},
                                          {1, "[] [[]]", "[[]]"},
                                          {1, "[] [[]] []", "[]"},
                                          {1, "[[][[]][]]", "∅"}}));
  // The printed list shows two terms before B⁻ is applied to their right
  // legs, which duplicates the last term.
  EXPECT_EQ(delta_N(F("[] [[]] []")), tt({{1, "∅", "[] [[]] []"},
                                          {1, "[]", "[[]] []"},
                                          {1, "[]", "[] [] []"},
                                          {2, "[] []", "[] []"},
                                          {1, "[] [[]]", "[]"},
                                          {1, "[] [[]] []", "∅"}}));
  EXPECT_EQ(delta_N(F("[[][]] [[]]")), tt({{1, "∅", "[[][]] [[]]"},
                                           {1, "[]", "[[]] [[]]"},
                                           {1, "[]", "[[][]] []"},
                                           {2, "[] []", "[[]] []"},
                                           {1, "[] []", "[] [[]]"},
                                           {3, "[] [] []", "[] []"},
                                           {1, "[[][]]", "[[]]"},
                                           {1, "[[][]] []", "[]"},
                                           {1, "[] [[][]]", "[]"},
                                           {1, "[[][]] [[]]", "∅"}}));
  EXPECT_EQ(delta_N(F("[]")), tt({{1, "∅", "[]"}, {1, "[]", "∅"}}));
  EXPECT_EQ(delta_N(OrderedForest{}), tt({{1, "∅", "∅"}}));
}

TEST(DeltaN, DualToGrossmanLarson) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& w : enumerate_ordered_forests(n)) {
      Tensor2<OrderedForest, OrderedForest> expect;
      for (std::size_t k = 0; k <= n; ++k)
        for (const auto& a : enumerate_ordered_forests(k))
          for (const auto& b : enumerate_ordered_forests(n - k))
            expect.add({a, b}, gl_product(a, b).coeff(w));
      EXPECT_EQ(delta_N(w), expect) << to_string(w);
    }
  }
}

TEST(DeltaN, CoassociativeAndCounital) {
  auto cop = [](const OrderedForest& w) { return delta_N(w); };
  for (const auto& w : forests_upto(5)) {
    auto d = delta_N(w);
    EXPECT_EQ(apply_left(d, cop), apply_right(d, cop)) << to_string(w);
    ForestComb left, right;
    for (const auto& [p, c] : d) {
      if (p.first.empty()) left.add(p.second, c);
      if (p.second.empty()) right.add(p.first, c);
    }
    EXPECT_EQ(left, ForestComb(w));
    EXPECT_EQ(right, ForestComb(w));
  }
}
