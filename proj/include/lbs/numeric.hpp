#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lbs/character.hpp"
#include "lbs/lincomb.hpp"
#include "lbs/trees.hpp"

namespace lbs {

// Exponents of y₁…y_d followed by the exponent of h.
using Monomial = std::vector<unsigned>;
using Poly = LinComb<Monomial>;

class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(std::size_t dim);
  PolyVectorField(std::size_t dim, std::vector<Poly> components);

  std::size_t dim() const { return dim_; }
  const std::vector<Poly>& components() const { return comps_; }
  const Poly& operator[](std::size_t i) const { return comps_.at(i); }
  Poly& operator[](std::size_t i) { return comps_.at(i); }

  PolyVectorField& add(const PolyVectorField& o, const Rational& scale = 1);

  friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Poly> comps_;
};

// Monomial c·y^powers·h^hpower in dim variables.
Poly monomial(std::size_t dim, const Rational& c, std::vector<unsigned> powers, unsigned hpower = 0);
Poly multiply(const Poly& a, const Poly& b);
Poly derivative(const Poly& p, std::size_t var);
// Drops every term with h-degree above max_power.
Poly truncate_h(const Poly& p, std::size_t max_power);
// Substitutes y = y0, leaving a polynomial in h.
std::vector<Rational> evaluate_at(const Poly& p, const std::vector<Rational>& y0, std::size_t max_power);

// The field y ↦ y.
PolyVectorField identity_field(std::size_t dim);

// Σ_j g_j ∂_j p, componentwise: the derivative of p along g.
PolyVectorField directional_derivative(const PolyVectorField& p, const PolyVectorField& g);

PolyVectorField elementary_differential(const PolyVectorField& f, const NonPlanarTree& t);

// α(∅)y + Σ h^{v(τ)} α(τ)/σ(τ) F_f(τ) over trees with at most n vertices,
// truncated at h^n. Tree values are read from single-tree forests.
PolyVectorField bseries(const PolyVectorField& f, const ForestCharacter& alpha, std::size_t n);
// Coefficients of h⁰…hⁿ per component at y0.
std::vector<std::vector<Rational>> bseries_eval(const PolyVectorField& f, const ForestCharacter& alpha,
                                                const std::vector<Rational>& y0, std::size_t n);
std::vector<Rational> bseries_eval(const Rational& h, const PolyVectorField& f, const ForestCharacter& alpha,
                                   const std::vector<Rational>& y0, std::size_t n);

// τ ↦ 1/τ!, ∅ ↦ 1.
ForestCharacter exact_flow_character(std::size_t order);

// B(h,(1/h)B(h,f,α),β) against B(h,f,α⋆_Hβ) through hⁿ at y0.
bool verify_bseries_substitution(const ForestCharacter& alpha, const ForestCharacter& beta,
                                 const PolyVectorField& f, const std::vector<Rational>& y0, std::size_t n);

// F_f(τ₁↷τ₂) = F_f(τ₂)′F_f(τ₁) for all trees with at most order vertices.
bool check_elementary_differential_morphism(const PolyVectorField& f, std::size_t order);

// {"dim":d,"components":[{"monomials":[{"coeff":"p/q","powers":[...],"hpower":k}]}]}
PolyVectorField field_from_json(std::string_view text);
std::string field_to_json(const PolyVectorField& f);
std::string to_string(const Poly& p, std::size_t dim);

}  // namespace lbs
