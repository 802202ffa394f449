#pragma once

#include <cstddef>
#include <vector>

#include "lbs/character.hpp"
#include "lbs/lincomb.hpp"
#include "lbs/trees.hpp"

namespace lbs {

using TreeComb = LinComb<NonPlanarTree>;

// t1 ↷ t2: attach the root of t1 below each vertex of t2.
TreeComb graft(const NonPlanarTree& t1, const NonPlanarTree& t2);
TreeComb graft(const TreeComb& x, const TreeComb& y);
bool check_prelie_identity(const NonPlanarTree& a, const NonPlanarTree& b, const NonPlanarTree& c);

// Vertex v of base (preorder index of its canonical representative) is
// replaced by inputs[assignment[v]].
TreeComb compose_prelie_operad(const std::vector<NonPlanarTree>& inputs, const NonPlanarTree& base,
                               const std::vector<std::size_t>& assignment);
// The assignment is read from base's labels 1..n.
TreeComb compose_prelie_operad(const std::vector<NonPlanarTree>& inputs, const NonPlanarTree& base);
// Sum over all bijections between base vertices and inputs.
TreeComb compose_prelie_all_couplings(const std::vector<NonPlanarTree>& inputs, const NonPlanarTree& base);

using ForestTensor = Tensor2<Forest, Forest>;

ForestTensor delta_CK(const Forest& f);
ForestTensor delta_H(const Forest& f);
Rational counit_CK(const Forest& f);
Rational counit_H(const Forest& f);

// Labeled brute-force dual of the pre-Lie operad, weighted by 1/k!.
ForestTensor h_operad_dual(const NonPlanarTree& t, std::size_t guard = 4);
bool check_H_operad_duality(const NonPlanarTree& t, std::size_t guard = 4);

enum class ForestCoproduct { CK, H };

// (a⋆b)(f) = Σ a(f₍₁₎) b(f₍₂₎). For H the left factor is the multiplicative
// extension of a's tree values, with value 1 on ∅.
ForestCharacter convolve(const ForestCharacter& a, const ForestCharacter& b, ForestCoproduct which);

}  // namespace lbs
