#include "lbs/io.hpp"

#include <algorithm>
#include <json.hpp>

namespace lbs {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<std::pair<Rational, std::string>> split_terms(std::string_view text) {
  std::vector<std::pair<Rational, std::string>> out;
  std::string body = trim(text);
  if (body == "0") return out;
  std::size_t i = 0;
  int sign = 1;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    sign = body[0] == '-' ? -1 : 1;
    i = 1;
  }
  while (i <= body.size()) {
    std::size_t j = body.find_first_of("+-", i);
    std::string piece = trim(std::string_view(body).substr(i, j == std::string::npos ? std::string::npos : j - i));
    if (piece.empty()) throw std::invalid_argument("empty term in linear combination");
    Rational c = 1;
    auto star = piece.find('*');
    if (star != std::string::npos) {
      c = parse_rational(trim(std::string_view(piece).substr(0, star)));
      piece = trim(std::string_view(piece).substr(star + 1));
    }
    out.emplace_back(sign * c, piece);
    if (j == std::string::npos) break;
    sign = body[j] == '-' ? -1 : 1;
    i = j + 1;
  }
  return out;
}

ForestComb parse_forest_comb(std::string_view text) {
  ForestComb out;
  for (const auto& [c, w] : split_terms(text)) out.add(parse_forest(w), c);
  return out;
}

namespace {

// Child arrays are listed in the same order as the bracket text.
json tree_json(const PlanarTree& t) {
  json a = json::array();
  for (auto it = t.children().rbegin(); it != t.children().rend(); ++it) a.push_back(tree_json(*it));
  return a;
}

PlanarTree tree_from(const json& a) {
  if (!a.is_array()) throw std::invalid_argument("tree must be a JSON array");
  std::vector<PlanarTree> ch;
  for (const auto& c : a) ch.push_back(tree_from(c));
  std::reverse(ch.begin(), ch.end());
  return PlanarTree(std::move(ch));
}

std::string rational_json(const Rational& q) { return to_string(q); }

Rational rational_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a string \"p/q\" or an integer");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

template <class B, class Parse, class Print>
std::string character_json(const Character<B>& a, Print&& print) {
  json j;
  j["order"] = a.order();
  j["empty"] = rational_json(a.empty_value());
  json v = json::object();
  for (const auto& [k, c] : a.values())
    if (k.vertex_count() > 0) v[print(k)] = rational_json(c);
  j["values"] = v;
  return j.dump();
}

template <class B, class Parse>
Character<B> character_parse(std::string_view text, Parse&& parse) {
  json j = parse_json(text);
  if (!j.contains("order") || !j["order"].is_number_unsigned())
    throw std::invalid_argument("character JSON needs a non-negative integer \"order\"");
  Character<B> a(j["order"].get<std::size_t>(), j.contains("empty") ? rational_from(j["empty"]) : Rational(0));
  if (j.contains("values"))
    for (const auto& [k, v] : j["values"].items()) a.set(parse(k), rational_from(v));
  return a;
}

}  // namespace

std::string forest_to_json(const OrderedForest& w) {
  json a = json::array();
  for (const auto& t : w.trees()) a.push_back(tree_json(t));
  return json{{"trees", a}}.dump();
}

OrderedForest forest_from_json(std::string_view text) {
  json j = parse_json(text);
  if (!j.contains("trees")) throw std::invalid_argument("forest JSON needs \"trees\"");
  std::vector<PlanarTree> ts;
  for (const auto& t : j["trees"]) ts.push_back(tree_from(t));
  return OrderedForest(std::move(ts));
}

std::string character_to_json(const CharacterMap& a) {
  return character_json<OrderedForest, void>(a, [](const OrderedForest& w) { return to_string(w); });
}

CharacterMap character_from_json(std::string_view text) {
  return character_parse<OrderedForest>(text, [](const std::string& s) { return parse_forest(s); });
}

std::string forest_character_to_json(const ForestCharacter& a) {
  return character_json<Forest, void>(a, [](const Forest& f) { return to_string(f); });
}

ForestCharacter forest_character_from_json(std::string_view text) {
  return character_parse<Forest>(text, [](const std::string& s) { return forget_planarity(parse_forest(s)); });
}

}  // namespace lbs
