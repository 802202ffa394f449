#include <gtest/gtest.h>

#include <random>

#include "lbs/io.hpp"
#include "lbs/prelie.hpp"
#include "test_util.hpp"

using namespace lbs;
using namespace testutil;

namespace {

std::vector<NonPlanarTree> trees_upto(std::size_t n) {
  std::vector<NonPlanarTree> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto& t : enumerate_nonplanar_trees(k)) out.push_back(t);
  return out;
}

std::vector<Forest> forests_upto(std::size_t n) {
  std::vector<Forest> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (const auto& f : enumerate_forests(k)) out.push_back(f);
  return out;
}

NonPlanarTree labeled(const std::string& s) { return canonicalize(parse_labeled_forest(s)[0]); }

}  // namespace

TEST(Graft, Examples) {
  EXPECT_EQ(graft(N("[[][]]"), N("[[]]")), tc({{1, "[[][[][]]]"}, {1, "[[[[][]]]]"}}));
  EXPECT_EQ(graft(N("[]"), N("[]")), tc({{1, "[[]]"}}));
  EXPECT_EQ(graft(N("[]"), N("[[][]]")), tc({{1, "[[][][]]"}, {2, "[[[]][]]"}}));
}

TEST(Graft, PreLieIdentity) {
  EXPECT_TRUE(check_prelie_identity(N("[]"), N("[[]]"), N("[[][]]")));
  auto ts = trees_upto(3);
  for (const auto& a : ts)
    for (const auto& b : ts)
      for (const auto& c : ts) EXPECT_TRUE(check_prelie_identity(a, b, c));
}

TEST(PreLieOperad, LabeledExample) {
  // Inputs carry the labels that the printed result uses for each block.
  std::vector<NonPlanarTree> inputs{labeled("[1[2]]"), labeled("[5[3][4[6]]]"), labeled("[8[7[10[9]]]]")};
  NonPlanarTree base = labeled("[1[3][2]]");
  LinComb<NonPlanarTree> expect;
  for (const char* s : {"[1[2][8[7[10[9]]]][5[3][4[6]]]]", "[1[2[5[3][4[6]]]][8[7[10[9]]]]]",
                        "[1[2[8[7[10[9]]]]][5[3][4[6]]]]", "[1[2[8[7[10[9]]]][5[3][4[6]]]]]"})
    expect.add(labeled(s), 1);
  EXPECT_EQ(compose_prelie_operad(inputs, base), expect);
}

TEST(PreLieOperad, UnitLaws) {
  for (const auto& t : trees_upto(4)) {
    std::vector<NonPlanarTree> dots(t.vertex_count(), N("[]"));
    std::vector<std::size_t> id(t.vertex_count());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    EXPECT_EQ(compose_prelie_operad(dots, t, id), TreeComb(t));
    EXPECT_EQ(compose_prelie_operad({t}, N("[]"), {0}), TreeComb(t));
  }
  EXPECT_THROW(compose_prelie_operad({N("[]")}, N("[[]]"), {0}), std::invalid_argument);
  EXPECT_THROW(compose_prelie_operad({N("[]"), N("[]")}, N("[[]]"), {0, 0}), std::invalid_argument);
}

TEST(PreLieOperad, Associativity) {
  // (y_1..y_m ∘ (x_1..x_n ∘ x)) equals the flat composition where each x_i
  // first receives its block of y's.
  std::mt19937 rng(3);
  auto ts = trees_upto(2);
  auto bases = trees_upto(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& x = bases[rng() % bases.size()];
    std::vector<NonPlanarTree> xs;
    std::size_t total = 0;
    for (std::size_t i = 0; i < x.vertex_count(); ++i) {
      xs.push_back(ts[rng() % ts.size()]);
      total += xs.back().vertex_count();
    }
    if (total + x.vertex_count() > 8) continue;
    std::vector<NonPlanarTree> ys;
    for (std::size_t i = 0; i < total; ++i) ys.push_back(rng() % 2 ? N("[]") : N("[[]]"));
    std::vector<std::size_t> idx(x.vertex_count());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    // Left: compose the x_i with their y-blocks, then substitute into x.
    // Labels keep the blocks apart.
    auto label_all = [](const NonPlanarTree& t, int& next) {
      std::function<PlanarTree(const PlanarTree&)> rec = [&](const PlanarTree& s) {
        int l = ++next;
        std::vector<PlanarTree> ch;
        for (const auto& c : s.children()) ch.push_back(rec(c));
        return PlanarTree(std::move(ch), l);
      };
      return canonicalize(rec(t.planar()));
    };
    TreeComb nested;
    {
      std::vector<TreeComb> inner;
      std::size_t pos = 0;
      for (const auto& xi : xs) {
        std::vector<NonPlanarTree> block(ys.begin() + pos, ys.begin() + pos + xi.vertex_count());
        std::vector<std::size_t> id(block.size());
        for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
        inner.push_back(compose_prelie_operad(block, xi, id));
        pos += xi.vertex_count();
      }
      // Expand multilinearly over the inner sums.
      std::function<void(std::size_t, std::vector<NonPlanarTree>&, Rational)> rec =
          [&](std::size_t i, std::vector<NonPlanarTree>& chosen, Rational c) {
            if (i == inner.size()) {
              nested.add(compose_prelie_operad(chosen, x, idx), c);
              return;
            }
            for (const auto& [t, a] : inner[i]) {
              chosen.push_back(t);
              rec(i + 1, chosen, c * a);
              chosen.pop_back();
            }
          };
      std::vector<NonPlanarTree> chosen;
      rec(0, chosen, 1);
    }
    TreeComb flat;
    {
      TreeComb outer = compose_prelie_operad(xs, x, idx);
      // Each vertex of an outer result came from a specific x_i; recover the
      // correspondence by redoing the outer step on labeled inputs.
      int next = 0;
      std::vector<NonPlanarTree> lx;
      for (const auto& xi : xs) lx.push_back(label_all(xi, next));
      TreeComb outer_l = compose_prelie_operad(lx, x, idx);
      for (const auto& [t, c] : outer_l) {
        // Vertex labeled k gets ys[k-1].
        std::vector<std::size_t> assign;
        std::function<void(const PlanarTree&)> walk = [&](const PlanarTree& s) {
          assign.push_back(static_cast<std::size_t>(s.label() - 1));
          for (const auto& ch : s.children()) walk(ch);
        };
        walk(t.planar());
        flat.add(compose_prelie_operad(ys, canonicalize(t.planar()), assign), c);
      }
      EXPECT_EQ(outer.size() >= 1, true);
    }
    EXPECT_EQ(nested, flat);
  }
}

TEST(DeltaCK, Examples) {
  EXPECT_EQ(delta_CK(NF("[[]]")), ft({{1, "∅", "[[]]"}, {1, "[]", "[]"}, {1, "[[]]", "∅"}}));
  EXPECT_EQ(delta_CK(NF("[[][]]")),
            ft({{1, "∅", "[[][]]"}, {2, "[]", "[[]]"}, {1, "[] []", "[]"}, {1, "[[][]]", "∅"}}));
  EXPECT_EQ(delta_CK(NF("[[]] [[][]]")), ft({{1, "∅", "[[]] [[][]]"},
                                             {1, "[]", "[] [[][]]"},
                                             {2, "[]", "[[]] [[]]"},
                                             {3, "[] []", "[] [[]]"},
                                             {1, "[] [] []", "[] []"},
                                             {1, "[[]]", "[[][]]"},
                                             {2, "[[]] []", "[[]]"},
                                             {1, "[[]] [] []", "[]"},
                                             {1, "[[][]]", "[[]]"},
                                             {1, "[[][]] []", "[]"},
                                             {1, "[[]] [[][]]", "∅"}}));
}

TEST(DeltaH, Examples) {
  EXPECT_EQ(delta_H(NF("[[[]]]")), ft({{1, "[[[]]]", "[]"}, {2, "[[]] []", "[[]]"}, {1, "[] [] []", "[[[]]]"}}));
  EXPECT_EQ(delta_H(NF("[[][]]")), ft({{1, "[[][]]", "[]"}, {2, "[[]] []", "[[]]"}, {1, "[] [] []", "[[][]]"}}));
  EXPECT_EQ(delta_H(NF("[[[]][]]")), ft({{1, "[[[]][]]", "[]"},
                                         {1, "[] [[[]]]", "[[]]"},
                                         {1, "[] [[][]]", "[[]]"},
                                         {2, "[] [] [[]]", "[[][]]"},
                                         {1, "[[]] [[]]", "[[]]"},
                                         {1, "[] [] [[]]", "[[[]]]"},
                                         {1, "[] [] [] []", "[[[]][]]"}}));
  EXPECT_EQ(delta_H(Forest{}), ft({{1, "∅", "∅"}}));
}

TEST(Coproducts, CoassociativeCounitalMultiplicative) {
  for (auto which : {ForestCoproduct::CK, ForestCoproduct::H}) {
    auto cop = [which](const Forest& f) { return which == ForestCoproduct::CK ? delta_CK(f) : delta_H(f); };
    auto counit = which == ForestCoproduct::CK ? counit_CK : counit_H;
    for (const auto& f : forests_upto(5)) {
      auto d = cop(f);
      EXPECT_EQ(apply_left(d, cop), apply_right(d, cop)) << to_string(f);
      LinComb<Forest> left, right;
      for (const auto& [p, c] : d) {
        left.add(p.second, c * counit(p.first));
        right.add(p.first, c * counit(p.second));
      }
      EXPECT_EQ(left, LinComb<Forest>(f));
      EXPECT_EQ(right, LinComb<Forest>(f));
    }
  }
  auto mul = [](const Forest& a, const Forest& b) { return LinComb<Forest>(a * b); };
  for (const auto& f : forests_upto(4))
    for (const auto& g : forests_upto(4))
      if (f.vertex_count() + g.vertex_count() <= 6)
        EXPECT_EQ(delta_H(f * g), tensor_product(delta_H(f), delta_H(g), mul, mul));
}

TEST(DeltaH, OperadDuality) {
  EXPECT_EQ(h_operad_dual(N("[]")), ft({{1, "[]", "[]"}}));
  for (const auto& t : trees_upto(4)) EXPECT_TRUE(check_H_operad_duality(t)) << to_string(t);
  EXPECT_THROW(h_operad_dual(N("[[[[[]]]]]"), 4), std::invalid_argument);
}

TEST(Convolve, Examples) {
  ForestCharacter a(3), b(3);
  a.set(NF("[]"), 2);
  a.set(NF("[[]]"), Rational(1, 3));
  b.set(NF("∅"), 5);
  b.set(NF("[]"), 7);
  b.set(NF("[[]]"), -1);
  b.set(NF("[[][]]"), 4);
  EXPECT_EQ(convolve(forest_counit_character(3), b, ForestCoproduct::CK), b);
  auto h = convolve(a, b, ForestCoproduct::H);
  EXPECT_EQ(h(NF("[]")), 2 * 7);
  EXPECT_EQ(h(NF("[[]]")), Rational(1, 3) * 7 + 4 * -1);
  EXPECT_EQ(h(NF("∅")), 5);
  EXPECT_THROW(convolve(a, ForestCharacter(2), ForestCoproduct::H), std::invalid_argument);
}
