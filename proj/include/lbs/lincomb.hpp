#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace lbs {

using Rational = mpq_class;

// Parses "p", "-p" or "p/q"; result is canonicalized.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Finite linear combination of basis elements with exact rational
// coefficients. Zero coefficients are never stored.
template <class Key>
class LinComb {
 public:
  using map_type = std::map<Key, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(const Key& k, const Rational& c = 1) { add(k, c); }

  void add(const Key& k, Rational c) {
    if (sgn(c) == 0) return;
    c.canonicalize();
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& other, const Rational& scale = 1) {
    for (const auto& [k, c] : other.terms_) add(k, scale * c);
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) { add(o); return *this; }
  LinComb& operator-=(const LinComb& o) { add(o, -1); return *this; }
  LinComb& operator*=(Rational s) {
    if (sgn(s) == 0) { terms_.clear(); return *this; }
    s.canonicalize();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= -1; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const LinComb& a, const LinComb& b) { return a.terms_ < b.terms_; }

  // Linear extension of a basis map Key -> LinComb<K2>.
  template <class F>
  auto apply(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Key&>()))>;
    Out out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

  // Sum of c·f(k) for a scalar-valued f.
  template <class F>
  Rational evaluate(F&& f) const {
    Rational s = 0;
    for (const auto& [k, c] : terms_) s += c * f(k);
    return s;
  }

 private:
  map_type terms_;
};

template <class L, class R>
using Tensor2 = LinComb<std::pair<L, R>>;

template <class L, class R>
Tensor2<L, R> tensor(const LinComb<L>& x, const LinComb<R>& y) {
  Tensor2<L, R> out;
  for (const auto& [l, a] : x)
    for (const auto& [r, b] : y) out.add({l, r}, a * b);
  return out;
}

// Bilinear extension of a basis product (K x K -> LinComb<K>).
template <class K, class F>
LinComb<K> bilinear(const LinComb<K>& x, const LinComb<K>& y, F&& prod) {
  LinComb<K> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(prod(a, b), ca * cb);
  return out;
}

// Componentwise product in A⊗B given basis products on each leg.
template <class L, class R, class FL, class FR>
Tensor2<L, R> tensor_product(const Tensor2<L, R>& x, const Tensor2<L, R>& y, FL&& left,
                             FR&& right) {
  Tensor2<L, R> out;
  for (const auto& [p, a] : x)
    for (const auto& [q, b] : y) {
      auto ls = left(p.first, q.first);
      auto rs = right(p.second, q.second);
      for (const auto& [l, cl] : ls)
        for (const auto& [r, cr] : rs) out.add({l, r}, a * b * cl * cr);
    }
  return out;
}

}  // namespace lbs

#include <tuple>

namespace lbs {

template <class A, class B, class C>
using Tensor3 = LinComb<std::tuple<A, B, C>>;

// (cop⊗Id)d and (Id⊗cop)d for a coproduct cop returning a Tensor2.
template <class L, class K, class F>
auto apply_left(const Tensor2<L, K>& d, F&& cop) {
  using P = typename std::decay_t<decltype(cop(std::declval<const L&>()))>::map_type::key_type;
  Tensor3<typename P::first_type, typename P::second_type, K> out;
  for (const auto& [p, c] : d)
    for (const auto& [q, b] : cop(p.first)) out.add({q.first, q.second, p.second}, c * b);
  return out;
}

template <class L, class K, class F>
auto apply_right(const Tensor2<L, K>& d, F&& cop) {
  using P = typename std::decay_t<decltype(cop(std::declval<const K&>()))>::map_type::key_type;
  Tensor3<L, typename P::first_type, typename P::second_type> out;
  for (const auto& [p, c] : d)
    for (const auto& [q, b] : cop(p.second)) out.add({p.first, q.first, q.second}, c * b);
  return out;
}

}  // namespace lbs
