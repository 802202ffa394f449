#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "lbs/character.hpp"
#include "lbs/lincomb.hpp"
#include "lbs/trees.hpp"

namespace testutil {

using lbs::Rational;

inline lbs::OrderedForest F(const std::string& s) { return lbs::parse_forest(s); }
inline lbs::PlanarTree T(const std::string& s) { return lbs::parse_tree(s); }
inline lbs::NonPlanarTree N(const std::string& s) { return lbs::canonicalize(lbs::parse_tree(s)); }
inline lbs::Forest NF(const std::string& s) { return lbs::forget_planarity(lbs::parse_forest(s)); }

struct Term {
  Rational c;
  std::string w;
};

inline lbs::LinComb<lbs::OrderedForest> lc(std::initializer_list<Term> terms) {
  lbs::LinComb<lbs::OrderedForest> out;
  for (const auto& t : terms) out.add(F(t.w), t.c);
  return out;
}

inline lbs::LinComb<lbs::NonPlanarTree> tc(std::initializer_list<Term> terms) {
  lbs::LinComb<lbs::NonPlanarTree> out;
  for (const auto& t : terms) out.add(N(t.w), t.c);
  return out;
}

struct Term2 {
  Rational c;
  std::string l, r;
};

inline lbs::Tensor2<lbs::OrderedForest, lbs::OrderedForest> tt(std::initializer_list<Term2> terms) {
  lbs::Tensor2<lbs::OrderedForest, lbs::OrderedForest> out;
  for (const auto& t : terms) out.add({F(t.l), F(t.r)}, t.c);
  return out;
}

inline lbs::Tensor2<lbs::Forest, lbs::Forest> ft(std::initializer_list<Term2> terms) {
  lbs::Tensor2<lbs::Forest, lbs::Forest> out;
  for (const auto& t : terms) out.add({NF(t.l), NF(t.r)}, t.c);
  return out;
}

inline lbs::Tensor2<lbs::SymWord, lbs::OrderedForest> wt(std::initializer_list<Term2> terms) {
  lbs::Tensor2<lbs::SymWord, lbs::OrderedForest> out;
  for (const auto& t : terms) out.add({lbs::parse_symword(t.l), F(t.r)}, t.c);
  return out;
}

}  // namespace testutil
