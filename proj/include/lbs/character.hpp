#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lbs/lincomb.hpp"
#include "lbs/trees.hpp"

namespace lbs {

// Multiset of non-empty ordered forests; the product is multiset union.
class SymWord {
 public:
  SymWord() = default;
  explicit SymWord(std::vector<OrderedForest> parts);
  explicit SymWord(OrderedForest part);

  const std::vector<OrderedForest>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  std::size_t vertex_count() const;

  friend SymWord operator*(const SymWord& a, const SymWord& b);
  friend auto operator<=>(const SymWord&, const SymWord&) = default;
  friend bool operator==(const SymWord&, const SymWord&) = default;

 private:
  std::vector<OrderedForest> parts_;
};

std::string to_string(const SymWord& w);
// Parts joined by '&'; multi-tree parts may be parenthesized. "1" is the unit.
SymWord parse_symword(std::string_view text);

// Truncated linear functional on a forest basis B (OrderedForest or
// Forest). Every basis element of at most order() vertices has a value;
// unset ones are zero. Asking for anything larger is an error.
template <class B>
class Character {
 public:
  Character() = default;
  explicit Character(std::size_t order, const Rational& empty_value = 0) : order_(order) {
    set(B{}, empty_value);
  }

  std::size_t order() const { return order_; }
  Rational empty_value() const { return (*this)(B{}); }

  Rational operator()(const B& x) const {
    if (x.vertex_count() > order_)
      throw std::out_of_range("character evaluated beyond its truncation order");
    auto it = values_.find(x);
    return it == values_.end() ? Rational(0) : it->second;
  }

  Rational operator()(const LinComb<B>& x) const {
    return x.evaluate([this](const B& b) { return (*this)(b); });
  }

  void set(const B& x, const Rational& v) {
    if (x.vertex_count() > order_)
      throw std::out_of_range("value beyond the truncation order");
    if (sgn(v) == 0)
      values_.erase(x);
    else {
      Rational q = v;
      q.canonicalize();
      values_[x] = q;
    }
  }

  const std::map<B, Rational>& values() const { return values_; }

  friend bool operator==(const Character& a, const Character& b) {
    return a.order_ == b.order_ && a.values_ == b.values_;
  }

 private:
  std::size_t order_ = 0;
  std::map<B, Rational> values_;
};

using CharacterMap = Character<OrderedForest>;
using ForestCharacter = Character<Forest>;

// δ(ω): 1 on ω, 0 elsewhere.
CharacterMap delta(const OrderedForest& w, std::size_t order);
// Indicator of ∅.
CharacterMap counit_character(std::size_t order);
ForestCharacter forest_counit_character(std::size_t order);

Rational pairing(const LinComb<OrderedForest>& x, const OrderedForest& w);

bool is_logarithmic(const CharacterMap& a);
bool is_exponential(const CharacterMap& a);

}  // namespace lbs
