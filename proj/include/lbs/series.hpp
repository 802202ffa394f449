#pragma once

#include <cstddef>

#include "lbs/character.hpp"
#include "lbs/postlie.hpp"
#include "lbs/subst.hpp"

namespace lbs {

// Element of the completion of OF cut off above order vertices.
struct TruncatedSeries {
  std::size_t order = 0;
  ForestComb value;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

TruncatedSeries series_of(const CharacterMap& a);
// δ of a series: the map ω ↦ coefficient of ω.
CharacterMap character_of(const TruncatedSeries& s);

TruncatedSeries concat(const TruncatedSeries& x, const TruncatedSeries& y);
TruncatedSeries left_graft(const TruncatedSeries& x, const TruncatedSeries& y);

// The D-algebra morphism with A(•) = δ⁻¹(α), truncated at α's order.
TruncatedSeries a_alpha(const CharacterMap& alpha, const OrderedForest& w);
TruncatedSeries a_alpha(const CharacterMap& alpha, const ForestComb& x);
// Σ over Δ_W(ω) of Πα(parts)·contraction.
ForestComb a_alpha_dagger(const CharacterMap& alpha, const OrderedForest& w);

// ⟨A(ω₁),ω₂⟩ = ⟨ω₁,A†(ω₂)⟩ for all ω₁, ω₂ up to order vertices.
bool check_adjoint(const CharacterMap& alpha, std::size_t order);

CharacterMap compose_LB(const CharacterMap& beta, const CharacterMap& alpha);
CharacterMap substitute_LB(const CharacterMap& alpha, const CharacterMap& beta);

// A_α(ω') = δ⁻¹(α ⋆_W δ(ω')) for every ω' up to order, and
// δ⁻¹(α ⋆_W β) = A_α(δ⁻¹(β)).
bool check_substitution_theorem(const CharacterMap& alpha, const CharacterMap& beta, std::size_t order);
// α⋆_W(β⋆_Nγ) = (α⋆_Wβ)⋆_N(α⋆_Wγ) and exponential β stays exponential.
bool check_automorphism(const CharacterMap& alpha, const CharacterMap& beta, const CharacterMap& gamma);

}  // namespace lbs
