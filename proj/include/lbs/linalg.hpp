#pragma once

#include <vector>

#include "lbs/lincomb.hpp"

namespace lbs {

// Reduced row echelon basis of the span; pivots are leading (smallest) keys.
template <class K>
std::vector<LinComb<K>> echelon_basis(const std::vector<LinComb<K>>& vectors) {
  std::vector<LinComb<K>> basis;
  for (LinComb<K> v : vectors) {
    for (const auto& b : basis) {
      const K& pivot = b.begin()->first;
      Rational c = v.coeff(pivot);
      if (sgn(c) != 0) v.add(b, -c);
    }
    if (v.is_zero()) continue;
    v *= 1 / Rational(v.begin()->second);
    for (auto& b : basis) {
      Rational c = b.coeff(v.begin()->first);
      if (sgn(c) != 0) b.add(v, -c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
std::size_t rank(const std::vector<LinComb<K>>& vectors) {
  return echelon_basis(vectors).size();
}

template <class K>
Rational dot(const LinComb<K>& x, const LinComb<K>& y) {
  Rational s = 0;
  for (const auto& [k, c] : x) s += c * y.coeff(k);
  return s;
}

// Orthogonal basis of the span for the inner product that makes the keys
// orthonormal.
template <class K>
std::vector<LinComb<K>> orthogonal_basis(const std::vector<LinComb<K>>& vectors) {
  std::vector<LinComb<K>> out;
  std::vector<Rational> norms;
  for (LinComb<K> v : vectors) {
    for (std::size_t i = 0; i < out.size(); ++i) v.add(out[i], -dot(v, out[i]) / norms[i]);
    if (v.is_zero()) continue;
    norms.push_back(dot(v, v));
    out.push_back(std::move(v));
  }
  return out;
}

template <class K>
LinComb<K> project(const LinComb<K>& u, const std::vector<LinComb<K>>& orthogonal) {
  LinComb<K> out;
  for (const auto& e : orthogonal) out.add(e, dot(u, e) / dot(e, e));
  return out;
}

}  // namespace lbs
