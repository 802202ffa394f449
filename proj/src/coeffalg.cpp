#include <algorithm>
#include <cctype>

#include "lbs/character.hpp"
#include "lbs/postlie.hpp"

namespace lbs {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto digits = [](std::string_view d) {
    return !d.empty() && std::all_of(d.begin(), d.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  std::string_view body = s;
  if (body[0] == '-' || body[0] == '+') body.remove_prefix(1);
  auto slash = body.find('/');
  if (!digits(body.substr(0, slash)) ||
      (slash != std::string_view::npos && !digits(body.substr(slash + 1))))
    throw std::invalid_argument("malformed rational literal: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational q(s, 10);
  if (slash != std::string_view::npos && q.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

SymWord::SymWord(std::vector<OrderedForest> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_)
    if (p.empty()) throw std::invalid_argument("symmetric word parts must be non-empty");
  std::sort(parts_.begin(), parts_.end());
}

SymWord::SymWord(OrderedForest part) : SymWord(std::vector<OrderedForest>{std::move(part)}) {}

std::size_t SymWord::vertex_count() const {
  std::size_t n = 0;
  for (const auto& p : parts_) n += p.vertex_count();
  return n;
}

SymWord operator*(const SymWord& a, const SymWord& b) {
  std::vector<OrderedForest> ps = a.parts_;
  ps.insert(ps.end(), b.parts_.begin(), b.parts_.end());
  return SymWord(std::move(ps));
}

std::string to_string(const SymWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '&';
    const auto& p = w.parts()[i];
    if (p.size() > 1)
      out += "(" + to_string(p) + ")";
    else
      out += to_string(p);
  }
  return out;
}

SymWord parse_symword(std::string_view text) {
  std::string s(text);
  auto trimmed = [](std::string t) {
    t.erase(0, t.find_first_not_of(" \t\n"));
    t.erase(t.find_last_not_of(" \t\n") + 1);
    return t;
  };
  s = trimmed(s);
  if (s == "1" || s.empty()) return {};
  std::vector<OrderedForest> parts;
  std::size_t start = 0;
  for (;;) {
    auto amp = s.find('&', start);
    std::string piece = trimmed(s.substr(start, amp == std::string::npos ? std::string::npos : amp - start));
    if (!piece.empty() && piece.front() == '(' && piece.back() == ')')
      piece = piece.substr(1, piece.size() - 2);
    parts.push_back(parse_forest(piece));
    if (amp == std::string::npos) break;
    start = amp + 1;
  }
  return SymWord(std::move(parts));
}

CharacterMap delta(const OrderedForest& w, std::size_t order) {
  CharacterMap a(order);
  a.set(w, 1);
  return a;
}

CharacterMap counit_character(std::size_t order) { return CharacterMap(order, 1); }

ForestCharacter forest_counit_character(std::size_t order) { return ForestCharacter(order, 1); }

Rational pairing(const LinComb<OrderedForest>& x, const OrderedForest& w) { return x.coeff(w); }

namespace {

template <class F>
bool all_shuffle_pairs(std::size_t order, F&& f) {
  for (std::size_t n1 = 1; n1 < order; ++n1)
    for (std::size_t n2 = 1; n1 + n2 <= order; ++n2)
      for (const auto& a : enumerate_ordered_forests(n1))
        for (const auto& b : enumerate_ordered_forests(n2))
          if (!f(a, b)) return false;
  return true;
}

}  // namespace

bool is_logarithmic(const CharacterMap& a) {
  if (sgn(a.empty_value()) != 0) return false;
  return all_shuffle_pairs(a.order(), [&](const OrderedForest& x, const OrderedForest& y) {
    return sgn(a(shuffle(x, y))) == 0;
  });
}

bool is_exponential(const CharacterMap& a) {
  if (a.empty_value() != 1) return false;
  return all_shuffle_pairs(a.order(), [&](const OrderedForest& x, const OrderedForest& y) {
    return a(shuffle(x, y)) == a(x) * a(y);
  });
}

}  // namespace lbs
