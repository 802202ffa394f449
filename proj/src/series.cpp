#include "lbs/series.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace lbs {

namespace {

void require_logarithmic(const CharacterMap& alpha) {
  if (!is_logarithmic(alpha)) throw std::invalid_argument("substituted map must be logarithmic");
}

}  // namespace

TruncatedSeries series_of(const CharacterMap& a) {
  TruncatedSeries s{a.order(), {}};
  for (const auto& [w, c] : a.values()) s.value.add(w, c);
  return s;
}

CharacterMap character_of(const TruncatedSeries& s) {
  CharacterMap out(s.order);
  for (const auto& [w, c] : s.value) out.set(w, c);
  return out;
}

TruncatedSeries concat(const TruncatedSeries& x, const TruncatedSeries& y) {
  const std::size_t n = std::min(x.order, y.order);
  return {n, truncate(concat(x.value, y.value), n)};
}

TruncatedSeries left_graft(const TruncatedSeries& x, const TruncatedSeries& y) {
  const std::size_t n = std::min(x.order, y.order);
  return {n, truncate(left_graft(x.value, y.value), n)};
}

TruncatedSeries a_alpha(const CharacterMap& alpha, const OrderedForest& w) {
  require_logarithmic(alpha);
  const TruncatedSeries gen = series_of(alpha);
  std::map<OrderedForest, TruncatedSeries> memo;
  std::function<TruncatedSeries(const OrderedForest&)> rec = [&](const OrderedForest& f) -> TruncatedSeries {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    TruncatedSeries out{alpha.order(), ForestComb(OrderedForest{})};
    for (const auto& t : f.trees()) out = concat(out, left_graft(rec(b_minus(t)), gen));
    memo.emplace(f, out);
    return out;
  };
  return rec(w.without_labels());
}

TruncatedSeries a_alpha(const CharacterMap& alpha, const ForestComb& x) {
  TruncatedSeries out{alpha.order(), {}};
  for (const auto& [w, c] : x) out.value.add(a_alpha(alpha, w).value, c);
  return out;
}

ForestComb a_alpha_dagger(const CharacterMap& alpha, const OrderedForest& w) {
  require_logarithmic(alpha);
  ForestComb out;
  for (const auto& [p, c] : delta_W(w)) {
    Rational k = c;
    for (const auto& part : p.first.parts()) k *= alpha(part);
    out.add(p.second, k);
  }
  return out;
}

bool check_adjoint(const CharacterMap& alpha, std::size_t order) {
  for (std::size_t n1 = 0; n1 <= order; ++n1)
    for (const auto& w1 : enumerate_ordered_forests(n1)) {
      const ForestComb a = a_alpha(alpha, w1).value;
      for (std::size_t n2 = 0; n2 <= order; ++n2)
        for (const auto& w2 : enumerate_ordered_forests(n2))
          if (a.coeff(w2) != a_alpha_dagger(alpha, w2).coeff(w1)) return false;
    }
  return true;
}

CharacterMap compose_LB(const CharacterMap& beta, const CharacterMap& alpha) { return convolve_N(beta, alpha); }

CharacterMap substitute_LB(const CharacterMap& alpha, const CharacterMap& beta) { return star_W(alpha, beta); }

bool check_substitution_theorem(const CharacterMap& alpha, const CharacterMap& beta, std::size_t order) {
  CharacterMap a = alpha, b = beta;
  if (order < a.order()) {
    a = CharacterMap(order, alpha.empty_value());
    for (const auto& [w, c] : alpha.values())
      if (w.vertex_count() <= order) a.set(w, c);
  }
  for (std::size_t n = 0; n <= order; ++n)
    for (const auto& w : enumerate_ordered_forests(n))
      if (!(series_of(substitute_LB(a, delta(w, a.order()))).value == a_alpha(a, w).value)) return false;
  CharacterMap bt(a.order(), beta.empty_value());
  for (const auto& [w, c] : b.values())
    if (w.vertex_count() <= a.order()) bt.set(w, c);
  return series_of(substitute_LB(a, bt)).value == a_alpha(a, series_of(bt).value).value;
}

bool check_automorphism(const CharacterMap& alpha, const CharacterMap& beta, const CharacterMap& gamma) {
  if (!(substitute_LB(alpha, compose_LB(beta, gamma)) ==
        compose_LB(substitute_LB(alpha, beta), substitute_LB(alpha, gamma))))
    return false;
  if (is_exponential(beta) && !is_exponential(substitute_LB(alpha, beta))) return false;
  if (is_exponential(beta) && is_exponential(gamma) && !is_exponential(compose_LB(beta, gamma))) return false;
  return true;
}

}  // namespace lbs
