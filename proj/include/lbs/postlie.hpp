#pragma once

#include <cstddef>
#include <string_view>

#include "lbs/character.hpp"
#include "lbs/lincomb.hpp"
#include "lbs/trees.hpp"

namespace lbs {

using ForestComb = LinComb<OrderedForest>;
// Lie polynomials are stored by their expansion in OF, [a,b] = ab - ba.
using LiePoly = ForestComb;

ForestComb truncate(const ForestComb& x, std::size_t order);
ForestComb concat(const ForestComb& x, const ForestComb& y);

ForestComb shuffle(const OrderedForest& a, const OrderedForest& b);
ForestComb shuffle(const ForestComb& x, const ForestComb& y);
Tensor2<OrderedForest, OrderedForest> delta_shuffle(const OrderedForest& w);
Tensor2<OrderedForest, OrderedForest> delta_shuffle(const ForestComb& x);
bool is_primitive_shuffle(const ForestComb& x, std::size_t order);

// τ1 ⊸ τ2: attach τ1 at each vertex of τ2 as its new leftmost child.
LinComb<PlanarTree> left_graft(const PlanarTree& t1, const PlanarTree& t2);
ForestComb left_graft(const OrderedForest& w1, const OrderedForest& w2);
ForestComb left_graft(const ForestComb& x, const ForestComb& y);

PlanarTree b_plus(const OrderedForest& w);
OrderedForest b_minus(const PlanarTree& t);

ForestComb gl_product(const OrderedForest& w1, const OrderedForest& w2);
ForestComb gl_product(const ForestComb& x, const ForestComb& y);

Tensor2<OrderedForest, OrderedForest> delta_N(const OrderedForest& w);
// (a⋆_N b)(ω) = (a⊗b)Δ_N(ω). Orders must agree.
CharacterMap convolve_N(const CharacterMap& a, const CharacterMap& b);

LiePoly bracket(const LiePoly& x, const LiePoly& y);
LiePoly lie_graft(const LiePoly& x, const LiePoly& y);
// ⟦x,y⟧ = x⊸y - y⊸x + [x,y]
LiePoly postlie_bracket(const LiePoly& x, const LiePoly& y);

LiePoly tree_generator(const PlanarTree& t);
// expr := tree | "{" expr "," expr "}"
LiePoly parse_lie(std::string_view text);
// Same grammar over labeled trees such as "[1[2]]".
LiePoly parse_labeled_lie(std::string_view text);

}  // namespace lbs
