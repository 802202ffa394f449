#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "lbs/character.hpp"
#include "lbs/postlie.hpp"

namespace lbs {

// LieRealizable: the two planar conditions, and every part has a non-zero
// projection onto the Lie polynomials in its trees (drops parts like "• •").
// Combinatorial: the two planar conditions only.
enum class PartitionRule { LieRealizable, Combinatorial };

struct AdmissiblePartition {
  OrderedForest host;
  // Vertices are preorder indices of host; block[v] is the part of v.
  std::vector<int> block;
  std::vector<OrderedForest> parts;
  // Common parent vertex of each part's roots (-1 for roots of host) and
  // the sibling positions of those roots.
  std::vector<int> root_parent;
  std::vector<std::vector<int>> root_positions;
};

// Validates the two conditions; throws std::invalid_argument otherwise.
AdmissiblePartition make_partition(const OrderedForest& host, const std::vector<int>& block);
bool is_admissible(const OrderedForest& host, const std::vector<int>& block);

std::vector<AdmissiblePartition> admissible_partitions(const OrderedForest& w,
                                                       PartitionRule rule = PartitionRule::LieRealizable);
ForestComb contract(const AdmissiblePartition& p);

using WTensor = Tensor2<SymWord, OrderedForest>;

WTensor delta_W(const OrderedForest& w, PartitionRule rule = PartitionRule::LieRealizable);
// Multiplicative extension to symmetric words, right legs read as words.
Tensor2<SymWord, SymWord> delta_W(const SymWord& w, PartitionRule rule = PartitionRule::LieRealizable);
// 1 on the unit and on words whose parts are all •.
Rational counit_W(const SymWord& w);

// Orthogonal projection of a word onto the Lie polynomials in its letters.
LiePoly lie_projection(const OrderedForest& word);
LiePoly lie_projection(const ForestComb& x);

// Multiset of non-zero Lie polynomials, each scaled so that its smallest
// term has coefficient 1.
class SymLieWord {
 public:
  SymLieWord() = default;
  const std::vector<LiePoly>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  std::size_t vertex_count() const;

  // Returns the scalar c with c·result equal to the product of the inputs;
  // c is 0 when some factor vanishes.
  static std::pair<Rational, SymLieWord> normalize(std::vector<LiePoly> factors);

  friend bool operator==(const SymLieWord&, const SymLieWord&) = default;
  friend bool operator<(const SymLieWord& a, const SymLieWord& b) { return a.factors_ < b.factors_; }

 private:
  std::vector<LiePoly> factors_;
};

std::string to_string(const SymLieWord& w);

using RhoTensor = Tensor2<SymLieWord, OrderedForest>;

// Product of the projections of the parts, as a normalized word.
LinComb<SymLieWord> lie_projection(const SymWord& w);

// Replace vertex v of base (preorder) by inputs[assignment[v]] in the
// concatenation / left-grafting expression of base.
ForestComb compose_module(const std::vector<ForestComb>& inputs, const OrderedForest& base,
                          const std::vector<std::size_t>& assignment);
// The assignment is read from base's labels 1..n.
ForestComb compose_module(const std::vector<ForestComb>& inputs, const OrderedForest& base);
ForestComb compose_module_all_couplings(const std::vector<ForestComb>& inputs, const OrderedForest& base);
// base is a Lie polynomial in labeled forests (labels 1..n on each term).
LiePoly compose_postlie_operad(const std::vector<LiePoly>& inputs, const LiePoly& base);

// Brute force over labeled insertions of Lie polynomials into forests.
RhoTensor rho_oracle(const OrderedForest& w, std::size_t guard = 4);
// (projection ⊗ Id)Δ_W.
RhoTensor rho_from_delta_W(const OrderedForest& w, PartitionRule rule = PartitionRule::LieRealizable);
Rational evaluate(const CharacterMap& a, const SymLieWord& w);

// (α⋆_Wβ)(ω) = Σ Πα(parts)·β(contraction). α must be logarithmic.
CharacterMap star_W(const CharacterMap& alpha, const CharacterMap& beta,
                    PartitionRule rule = PartitionRule::LieRealizable);
CharacterMap star_rho(const CharacterMap& alpha, const CharacterMap& beta, std::size_t guard = 4);

// r∘projection: vanishes on ∅ and on all shuffles.
CharacterMap logarithmic_from(const CharacterMap& r);
// exp of a logarithmic map for the deconcatenation convolution.
CharacterMap exponential_from(const CharacterMap& alpha);
// Random small rationals on forests of 1..support vertices.
CharacterMap random_character(std::size_t order, std::mt19937& rng, std::size_t support,
                              const Rational& empty = 0);

struct Report {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string what) {
    ok = false;
    failures.push_back(std::move(what));
  }
};

// Oracle-scale checks of the coaction axioms for ρ up to order, plus the
// character identity α⋆(a⋆_N b) = (α⋆a)⋆_N(α⋆b) up to char_order.
Report check_cointeraction(std::size_t order, std::size_t char_order = 4, unsigned seed = 1);
// Term-level (Id⊗Δ_N)Δ_W = m¹³(Δ_W⊗Δ_W)Δ_N. With lie_projected the
// symmetric-word legs are compared after projection.
Report check_delta_W_cointeraction(std::size_t order, PartitionRule rule = PartitionRule::LieRealizable,
                                   bool lie_projected = false);

// Coassociativity and both counit laws of Δ_W on forests up to order.
Report check_delta_W_coassociativity(std::size_t order, PartitionRule rule = PartitionRule::LieRealizable,
                                     bool lie_projected = false);
// Σ(|part|−1) + (|contraction|−1) = |ω|−1 on every term.
bool check_grading(std::size_t order, PartitionRule rule = PartitionRule::LieRealizable);

// Tree-part terms of Δ_W(τ), planarity forgotten, against Δ_H(π(τ)).
bool check_pi_morphism(const PlanarTree& t);
Tensor2<Forest, Forest> pi_image(const PlanarTree& t);

}  // namespace lbs
