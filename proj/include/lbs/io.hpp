#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lbs/character.hpp"
#include "lbs/postlie.hpp"
#include "lbs/lincomb.hpp"
#include "lbs/trees.hpp"

namespace lbs {

template <class K>
std::string key_string(const K& k) {
  return to_string(k);
}

template <class L, class R>
std::string key_string(const std::pair<L, R>& p) {
  return key_string(p.first) + " ⊗ " + key_string(p.second);
}

// "c1 * w1 + c2 * w2 - c3 * w3"; the zero combination prints as "0".
template <class K>
std::string to_string(const LinComb<K>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    Rational a = abs(c);
    if (first)
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    out += to_string(a) + " * " + key_string(k);
    first = false;
  }
  return out;
}

// Splits "c1 * w1 + c2 * w2 - w3" into (coefficient, word) pairs.
std::vector<std::pair<Rational, std::string>> split_terms(std::string_view text);

ForestComb parse_forest_comb(std::string_view text);

// JSON forms.
std::string forest_to_json(const OrderedForest& w);
OrderedForest forest_from_json(std::string_view text);
std::string character_to_json(const CharacterMap& a);
CharacterMap character_from_json(std::string_view text);
std::string forest_character_to_json(const ForestCharacter& a);
ForestCharacter forest_character_from_json(std::string_view text);

template <class K>
std::ostream& operator<<(std::ostream& os, const LinComb<K>& x) {
  return os << to_string(x);
}

inline std::ostream& operator<<(std::ostream& os, const PlanarTree& t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, const OrderedForest& w) { return os << to_string(w); }
inline std::ostream& operator<<(std::ostream& os, const NonPlanarTree& t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, const Forest& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const SymWord& w) { return os << to_string(w); }

}  // namespace lbs
