#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lbs/io.hpp"
#include "lbs/laws.hpp"
#include "lbs/numeric.hpp"
#include "lbs/prelie.hpp"
#include "lbs/series.hpp"
#include "lbs/subst.hpp"

namespace lbs {

namespace {

using nlohmann::json;

enum class Format { Text, Json };

std::string text_of(const Rational& q) { return to_string(q); }

template <class K>
std::string key_text(const K& k) {
  return key_string(k);
}

template <class K>
json comb_json(const LinComb<K>& x) {
  json terms = json::array();
  for (const auto& [k, c] : x) terms.push_back({{"coeff", text_of(c)}, {"forest", key_text(k)}});
  return {{"terms", terms}};
}

template <class L, class R>
json comb_json(const Tensor2<L, R>& x) {
  json terms = json::array();
  for (const auto& [k, c] : x)
    terms.push_back({{"coeff", text_of(c)}, {"left", key_text(k.first)}, {"right", key_text(k.second)}});
  return {{"terms", terms}};
}

// A path, or inline JSON when the argument starts with '{'.
std::string read_input(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot read " + arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NonPlanarTree single_tree(const std::string& text) {
  OrderedForest w = parse_forest(text);
  if (w.size() != 1) throw std::invalid_argument("expected a single tree: " + text);
  return canonicalize(w[0]);
}

NonPlanarTree labeled_tree(const std::string& text) {
  OrderedForest w = parse_labeled_forest(text);
  if (w.size() != 1) throw std::invalid_argument("expected a single tree: " + text);
  return canonicalize(w[0]);
}

PartitionRule rule_of(const std::string& s) {
  if (s == "lie") return PartitionRule::LieRealizable;
  if (s == "combinatorial") return PartitionRule::Combinatorial;
  throw std::invalid_argument("unknown partition rule: " + s);
}

std::vector<Rational> point_of(const std::string& s, std::size_t dim) {
  std::vector<Rational> out;
  if (s.empty()) return std::vector<Rational>(dim, 1);
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(parse_rational(piece));
  if (out.size() != dim) throw std::invalid_argument("point dimension differs from the field");
  return out;
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Trees, forests and Lie-Butcher substitution"};
    app.require_subcommand(1);
    app.fallthrough();
    app.allow_extras();
    std::string format = "text";
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    setup(app);
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      out_ << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err_ << e.what() << "\n";
      return 1;
    }
    inputs_ = app.remaining();
    if (!inputs_.empty() && !operad_->parsed()) {
      err_ << "unexpected arguments:";
      for (const auto& s : inputs_) err_ << " " << s;
      err_ << "\n";
      return 1;
    }
    format_ = format == "json" ? Format::Json : Format::Text;
    try {
      return action_();
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return 1;
    }
  }

 private:
  void setup(CLI::App& app) {
    auto* parse = app.add_subcommand("parse", "parse a forest and print it back");
    parse->add_option("forest", a_, "bracket text or forest JSON")->required();
    parse->add_flag("--labeled", labeled_, "accept vertex labels");
    parse->callback([this] { action_ = [this] { return cmd_parse(); }; });

    auto* canon = app.add_subcommand("canon", "canonical non-planar form");
    canon->add_option("forest", a_)->required();
    canon->callback([this] { action_ = [this] { return cmd_canon(); }; });

    auto* en = app.add_subcommand("enumerate", "list trees or forests of a given size");
    en->add_option("-n,--order", order_, "vertex count")->required();
    en->add_option("--kind", kind_, "planar, trees, ordered or forests")
        ->check(CLI::IsMember({"planar", "trees", "ordered", "forests"}));
    en->callback([this] { action_ = [this] { return cmd_enumerate(); }; });

    auto* graft = app.add_subcommand("graft", "graft the first argument onto the second");
    graft->add_option("left", a_)->required();
    graft->add_option("right", b_)->required();
    graft->add_option("--mode", mode_, "prelie or postlie")->check(CLI::IsMember({"prelie", "postlie"}));
    graft->callback([this] { action_ = [this] { return cmd_graft(); }; });

    auto* product = app.add_subcommand("product", "products of forest combinations");
    product->add_option("left", a_)->required();
    product->add_option("right", b_)->required();
    product->add_option("--op", op_, "gl, shuffle, concat, graft, bracket or postlie")
        ->required()
        ->check(CLI::IsMember({"gl", "shuffle", "concat", "graft", "bracket", "postlie"}));
    product->callback([this] { action_ = [this] { return cmd_product(); }; });

    auto* cop = app.add_subcommand("coproduct", "coproducts of a forest");
    cop->add_option("forest", a_)->required();
    cop->add_option("--op", op_, "ck, h, n, shuffle, w or rho")
        ->required()
        ->check(CLI::IsMember({"ck", "h", "n", "shuffle", "w", "rho"}));
    cop->add_option("--rule", rule_, "lie or combinatorial")->check(CLI::IsMember({"lie", "combinatorial"}));
    cop->add_option("--guard", guard_, "size cap for the ρ oracle");
    cop->callback([this] { action_ = [this] { return cmd_coproduct(); }; });

    auto* operad = app.add_subcommand("operad", "operadic composition");
    operad->add_option("base", a_, "labeled tree (prelie) or labeled Lie expression (postlie)")->required();
    // The inputs are collected as extras: a vector option would read "[...]"
    // as an inline list.
    operad_ = operad;
    operad->add_option("--mode", mode_, "prelie or postlie")->check(CLI::IsMember({"prelie", "postlie"}));
    operad->add_flag("--all-couplings", all_couplings_, "sum over every bijection (prelie, unlabeled base)");
    operad->callback([this] { action_ = [this] { return cmd_operad(); }; });

    auto* sub = app.add_subcommand("substitute", "α ⋆_W β for characters on ordered forests");
    sub->add_option("--alpha", alpha_, "character JSON file")->required();
    sub->add_option("--beta", beta_, "character JSON file")->required();
    sub->add_option("--rule", rule_)->check(CLI::IsMember({"lie", "combinatorial"}));
    sub->add_option("--guard", guard_, "use the ρ oracle with this size cap");
    sub->callback([this] { action_ = [this] { return cmd_substitute(); }; });

    auto* comp = app.add_subcommand("compose", "convolution of characters");
    comp->add_option("--alpha", alpha_)->required();
    comp->add_option("--beta", beta_)->required();
    comp->add_option("--op", op_, "n (ordered forests), ck or h (non-planar forests)")
        ->check(CLI::IsMember({"n", "ck", "h"}));
    comp->callback([this] { action_ = [this] { return cmd_compose(); }; });

    auto* bs = app.add_subcommand("bseries", "B-series of a polynomial vector field");
    bs->add_option("action", action_name_, "eval or verify")->required()->check(CLI::IsMember({"eval", "verify"}));
    bs->add_option("--field", field_, "vector field JSON file")->required();
    bs->add_option("--alpha", alpha_)->required();
    bs->add_option("--beta", beta_);
    bs->add_option("-n,--order", order_)->required();
    bs->add_option("--point", point_, "comma separated coordinates, default all 1");
    bs->add_option("--step", h_, "evaluate at this step size h");
    bs->callback([this] { action_ = [this] { return cmd_bseries(); }; });

    auto* ver = app.add_subcommand("verify", "run algebraic laws");
    ver->add_option("laws", laws_);
    ver->add_flag("--all", all_, "every registered law");
    ver->add_flag("--list", list_, "print the registry");
    ver->add_option("-n,--order", order_opt_, "override each law's default order");
    ver->callback([this] { action_ = [this] { return cmd_verify(); }; });
  }

  void emit(const json& j, const std::string& text) {
    if (format_ == Format::Json)
      out_ << j.dump() << "\n";
    else
      out_ << text << "\n";
  }

  template <class K>
  void emit_comb(const LinComb<K>& x) {
    emit(comb_json(x), to_string(x));
  }

  template <class B>
  void emit_character(const Character<B>& a, const std::string& json_text) {
    if (format_ == Format::Json) {
      out_ << json_text << "\n";
      return;
    }
    out_ << "order " << a.order() << "\n";
    for (const auto& [k, c] : a.values()) out_ << to_string(k) << " : " << to_string(c) << "\n";
  }

  int cmd_parse() {
    OrderedForest w;
    if (!a_.empty() && a_.front() == '{')
      w = forest_from_json(a_);
    else
      w = labeled_ ? parse_labeled_forest(a_) : parse_forest(a_);
    const std::string text = labeled_ ? to_labeled_string(w) : to_string(w);
    emit({{"forest", text},
          {"vertices", w.vertex_count()},
          {"trees", w.size()},
          {"json", json::parse(forest_to_json(w))}},
         text);
    return 0;
  }

  int cmd_canon() {
    const OrderedForest w = parse_forest(a_);
    const Forest f = forget_planarity(w);
    json j{{"canonical", to_string(f)}};
    std::string text = to_string(f);
    if (w.size() == 1) {
      const auto s = symmetry_factor(canonicalize(w[0]));
      const auto g = tree_factorial(w[0]);
      j["symmetry_factor"] = s;
      j["tree_factorial"] = g;
      text += "\nsymmetry factor " + std::to_string(s) + "\ntree factorial " + std::to_string(g);
    }
    emit(j, text);
    return 0;
  }

  int cmd_enumerate() {
    std::vector<std::string> items;
    if (kind_ == "planar")
      for (const auto& t : enumerate_planar_trees(order_)) items.push_back(to_string(t));
    else if (kind_ == "trees")
      for (const auto& t : enumerate_nonplanar_trees(order_)) items.push_back(to_string(t));
    else if (kind_ == "forests")
      for (const auto& f : enumerate_forests(order_)) items.push_back(to_string(f));
    else
      for (const auto& w : enumerate_ordered_forests(order_)) items.push_back(to_string(w));
    std::string text;
    for (const auto& s : items) text += (text.empty() ? "" : "\n") + s;
    emit({{"kind", kind_}, {"order", order_}, {"count", items.size()}, {"items", items}}, text);
    return 0;
  }

  int cmd_graft() {
    if (mode_ == "prelie")
      emit_comb(graft(single_tree(a_), single_tree(b_)));
    else
      emit_comb(left_graft(parse_forest_comb(a_), parse_forest_comb(b_)));
    return 0;
  }

  int cmd_product() {
    const ForestComb x = parse_forest_comb(a_), y = parse_forest_comb(b_);
    ForestComb r;
    if (op_ == "gl")
      r = gl_product(x, y);
    else if (op_ == "shuffle")
      r = shuffle(x, y);
    else if (op_ == "concat")
      r = concat(x, y);
    else if (op_ == "graft")
      r = left_graft(x, y);
    else if (op_ == "bracket")
      r = bracket(x, y);
    else
      r = postlie_bracket(x, y);
    emit_comb(r);
    return 0;
  }

  int cmd_coproduct() {
    if (op_ == "ck" || op_ == "h") {
      const Forest f = forget_planarity(parse_forest(a_));
      emit_comb(op_ == "ck" ? delta_CK(f) : delta_H(f));
      return 0;
    }
    const OrderedForest w = parse_forest(a_);
    if (op_ == "n")
      emit_comb(delta_N(w));
    else if (op_ == "shuffle")
      emit_comb(delta_shuffle(w));
    else if (op_ == "w")
      emit_comb(delta_W(w, rule_of(rule_)));
    else if (guard_)
      emit_comb(rho_oracle(w, *guard_));
    else
      emit_comb(rho_from_delta_W(w, rule_of(rule_)));
    return 0;
  }

  int cmd_operad() {
    if (inputs_.empty()) throw std::invalid_argument("operad needs at least one input");
    if (mode_ == "postlie") {
      std::vector<LiePoly> in;
      for (const auto& s : inputs_) in.push_back(parse_lie(s));
      emit_comb(compose_postlie_operad(in, parse_labeled_lie(a_)));
      return 0;
    }
    std::vector<NonPlanarTree> in;
    for (const auto& s : inputs_) in.push_back(single_tree(s));
    emit_comb(all_couplings_ ? compose_prelie_all_couplings(in, single_tree(a_))
                             : compose_prelie_operad(in, labeled_tree(a_)));
    return 0;
  }

  int cmd_substitute() {
    const CharacterMap a = character_from_json(read_input(alpha_));
    const CharacterMap b = character_from_json(read_input(beta_));
    const CharacterMap r = guard_ ? star_rho(a, b, *guard_) : star_W(a, b, rule_of(rule_));
    emit_character(r, character_to_json(r));
    return 0;
  }

  int cmd_compose() {
    if (op_ == "ck" || op_ == "h") {
      const ForestCharacter a = forest_character_from_json(read_input(alpha_));
      const ForestCharacter b = forest_character_from_json(read_input(beta_));
      const ForestCharacter r = convolve(a, b, op_ == "ck" ? ForestCoproduct::CK : ForestCoproduct::H);
      emit_character(r, forest_character_to_json(r));
      return 0;
    }
    const CharacterMap r =
        convolve_N(character_from_json(read_input(alpha_)), character_from_json(read_input(beta_)));
    emit_character(r, character_to_json(r));
    return 0;
  }

  int cmd_bseries() {
    const PolyVectorField f = field_from_json(read_input(field_));
    const ForestCharacter a = forest_character_from_json(read_input(alpha_));
    const std::vector<Rational> y0 = point_of(point_, f.dim());
    if (action_name_ == "verify") {
      if (beta_.empty()) throw std::invalid_argument("bseries verify needs --beta");
      const ForestCharacter b = forest_character_from_json(read_input(beta_));
      const bool ok = verify_bseries_substitution(a, b, f, y0, order_);
      emit({{"law", "bseries-substitution"}, {"ok", ok}, {"order", order_}},
           std::string(ok ? "PASS" : "FAIL") + " bseries-substitution through h^" + std::to_string(order_));
      return ok ? 0 : 2;
    }
    if (!h_.empty()) {
      std::vector<std::string> vals;
      for (const auto& v : bseries_eval(parse_rational(h_), f, a, y0, order_)) vals.push_back(to_string(v));
      std::string text;
      for (const auto& v : vals) text += (text.empty() ? "" : " ") + v;
      emit({{"h", h_}, {"value", vals}}, text);
      return 0;
    }
    json comps = json::array();
    std::string text;
    std::size_t i = 0;
    for (const auto& coeffs : bseries_eval(f, a, y0, order_)) {
      std::vector<std::string> cs;
      for (const auto& c : coeffs) cs.push_back(to_string(c));
      comps.push_back(cs);
      std::string line = "y" + std::to_string(++i) + ":";
      for (std::size_t k = 0; k < cs.size(); ++k) line += " " + cs[k] + (k ? " h^" + std::to_string(k) : "");
      text += (text.empty() ? "" : "\n") + line;
    }
    emit({{"order", order_}, {"coefficients", comps}}, text);
    return 0;
  }

  int cmd_verify() {
    if (list_) {
      const auto names = verify_registry();
      std::string text;
      for (const auto& l : law_registry())
        text += (text.empty() ? "" : "\n") + l.name + " (n=" + std::to_string(l.default_order) + ") " + l.summary;
      emit(names, text);
      return 0;
    }
    std::vector<std::string> names = all_ ? verify_registry() : laws_;
    if (names.empty()) throw std::invalid_argument("name a law, or pass --all or --list");
    for (const auto& n : names) find_law(n);
    bool ok = true;
    json results = json::array();
    std::string text;
    for (const auto& n : names) {
      const Law& law = find_law(n);
      const std::size_t order = order_opt_.value_or(law.default_order);
      const LawResult r = law.run(order);
      ok = ok && r.ok;
      json j{{"law", n}, {"ok", r.ok}, {"order", order}, {"cases", r.cases}};
      if (!r.ok) j["counterexample"] = r.counterexample;
      results.push_back(j);
      std::string line = std::string(r.ok ? "PASS " : "FAIL ") + n + " (n=" + std::to_string(order) + ", " +
                         std::to_string(r.cases) + " cases)";
      if (!r.ok) line += "\n  counterexample: " + r.counterexample;
      text += (text.empty() ? "" : "\n") + line;
    }
    emit({{"ok", ok}, {"results", results}}, text);
    return ok ? 0 : 2;
  }

  std::ostream& out_;
  std::ostream& err_;
  Format format_ = Format::Text;
  std::function<int()> action_;

  std::string a_, b_, mode_ = "postlie", op_, kind_ = "ordered", rule_ = "lie";
  std::string alpha_, beta_, field_, point_, h_, action_name_;
  std::vector<std::string> inputs_, laws_;
  CLI::App* operad_ = nullptr;
  std::size_t order_ = 0;
  std::optional<std::size_t> order_opt_, guard_;
  bool labeled_ = false, all_couplings_ = false, all_ = false, list_ = false;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  return cli.run(argc, argv);
}

}  // namespace lbs
