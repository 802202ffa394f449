#include "lbs/trees.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace lbs {

PlanarTree::PlanarTree(std::vector<PlanarTree> children, int label)
    : children_(std::move(children)), label_(label) {
  for (const auto& c : children_) size_ += c.size_;
}

PlanarTree PlanarTree::with_label(int label) const {
  PlanarTree t = *this;
  t.label_ = label;
  return t;
}

PlanarTree PlanarTree::without_labels() const {
  std::vector<PlanarTree> ch;
  ch.reserve(children_.size());
  for (const auto& c : children_) ch.push_back(c.without_labels());
  return PlanarTree(std::move(ch));
}

std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(),
                                                      b.children_.begin(), b.children_.end());
      c != 0)
    return c;
  return a.label_ <=> b.label_;
}

OrderedForest::OrderedForest(std::vector<PlanarTree> trees) : trees_(std::move(trees)) {
  for (const auto& t : trees_) size_ += t.vertex_count();
}

OrderedForest::OrderedForest(PlanarTree tree) : OrderedForest(std::vector<PlanarTree>{std::move(tree)}) {}

OrderedForest OrderedForest::without_labels() const {
  std::vector<PlanarTree> ts;
  for (const auto& t : trees_) ts.push_back(t.without_labels());
  return OrderedForest(std::move(ts));
}

OrderedForest operator*(const OrderedForest& a, const OrderedForest& b) {
  std::vector<PlanarTree> ts = a.trees_;
  ts.insert(ts.end(), b.trees_.begin(), b.trees_.end());
  return OrderedForest(std::move(ts));
}

std::strong_ordering operator<=>(const OrderedForest& a, const OrderedForest& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(), b.trees_.begin(),
                                                b.trees_.end());
}

namespace {

PlanarTree canonical_planar(const PlanarTree& t) {
  std::vector<PlanarTree> ch;
  ch.reserve(t.children().size());
  for (const auto& c : t.children()) ch.push_back(canonical_planar(c));
  std::sort(ch.begin(), ch.end());
  return PlanarTree(std::move(ch), t.label());
}

}  // namespace

NonPlanarTree::NonPlanarTree(const PlanarTree& t) : t_(canonical_planar(t)) {}

Forest::Forest(std::vector<NonPlanarTree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end());
  for (const auto& t : trees_) size_ += t.vertex_count();
}

Forest::Forest(NonPlanarTree tree) : Forest(std::vector<NonPlanarTree>{std::move(tree)}) {}

Forest operator*(const Forest& a, const Forest& b) {
  std::vector<NonPlanarTree> ts = a.trees_;
  ts.insert(ts.end(), b.trees_.begin(), b.trees_.end());
  return Forest(std::move(ts));
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(), b.trees_.begin(),
                                                b.trees_.end());
}

PlanarTree bullet() { return PlanarTree(); }

NonPlanarTree canonicalize(const PlanarTree& t) { return NonPlanarTree(t); }

Forest forget_planarity(const OrderedForest& x) {
  std::vector<NonPlanarTree> ts;
  for (const auto& t : x.trees()) ts.emplace_back(t);
  return Forest(std::move(ts));
}

unsigned long long symmetry_factor(const NonPlanarTree& t) {
  unsigned long long s = 1;
  const auto& ch = t.planar().children();
  for (std::size_t i = 0; i < ch.size();) {
    std::size_t j = i;
    while (j < ch.size() && ch[j] == ch[i]) ++j;
    unsigned long long sub = symmetry_factor(NonPlanarTree(ch[i]));
    for (std::size_t k = 1; k <= j - i; ++k) s *= sub * k;
    i = j;
  }
  return s;
}

unsigned long long tree_factorial(const PlanarTree& t) {
  unsigned long long g = t.vertex_count();
  for (const auto& c : t.children()) g *= tree_factorial(c);
  return g;
}

namespace {

void forests_into(std::size_t m, std::vector<std::vector<OrderedForest>>& memo,
                  std::vector<std::vector<PlanarTree>>& trees);

const std::vector<PlanarTree>& trees_of(std::size_t n, std::vector<std::vector<OrderedForest>>& memo,
                                        std::vector<std::vector<PlanarTree>>& trees) {
  if (trees.size() <= n) trees.resize(n + 1);
  if (trees[n].empty()) {
    forests_into(n - 1, memo, trees);
    for (const auto& f : memo[n - 1]) trees[n].emplace_back(f.trees());
  }
  return trees[n];
}

void forests_into(std::size_t m, std::vector<std::vector<OrderedForest>>& memo,
                  std::vector<std::vector<PlanarTree>>& trees) {
  if (memo.size() <= m) memo.resize(m + 1);
  if (!memo[m].empty()) return;
  if (m == 0) {
    memo[0].emplace_back();
    return;
  }
  std::vector<OrderedForest> out;
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<PlanarTree> first = trees_of(k, memo, trees);
    forests_into(m - k, memo, trees);
    for (const auto& t : first)
      for (const auto& rest : memo[m - k]) out.push_back(OrderedForest(t) * rest);
  }
  memo[m] = std::move(out);
}

}  // namespace

std::vector<PlanarTree> enumerate_planar_trees(std::size_t n) {
  if (n == 0) return {};
  std::vector<std::vector<OrderedForest>> memo;
  std::vector<std::vector<PlanarTree>> trees;
  return trees_of(n, memo, trees);
}

std::vector<OrderedForest> enumerate_ordered_forests(std::size_t n) {
  std::vector<std::vector<OrderedForest>> memo;
  std::vector<std::vector<PlanarTree>> trees;
  forests_into(n, memo, trees);
  return memo[n];
}

std::vector<NonPlanarTree> enumerate_nonplanar_trees(std::size_t n) {
  std::set<NonPlanarTree> seen;
  for (const auto& t : enumerate_planar_trees(n)) seen.insert(canonicalize(t));
  return {seen.begin(), seen.end()};
}

std::vector<Forest> enumerate_forests(std::size_t n) {
  std::set<Forest> seen;
  for (const auto& f : enumerate_ordered_forests(n)) seen.insert(forget_planarity(f));
  return {seen.begin(), seen.end()};
}

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class Parser {
 public:
  Parser(std::string_view s, bool labels) : s_(s), labels_(labels) {}

  OrderedForest forest() {
    skip();
    if (rest_is("∅") || rest_is("1")) {
      pos_ += rest_is("∅") ? std::string_view("∅").size() : 1;
      skip();
      if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
      return {};
    }
    std::vector<PlanarTree> ts;
    while (pos_ < s_.size()) {
      ts.push_back(tree());
      skip();
    }
    return OrderedForest(std::move(ts));
  }

 private:
  PlanarTree tree() {
    if (rest_is("•")) {
      pos_ += std::string_view("•").size();
      return PlanarTree();
    }
    if (pos_ >= s_.size() || s_[pos_] != '[') throw ParseError("expected '['", pos_);
    ++pos_;
    int label = 0;
    if (labels_) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ > start) label = std::stoi(std::string(s_.substr(start, pos_ - start)));
    }
    std::vector<PlanarTree> ch;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) throw ParseError("unbalanced brackets", pos_);
      if (s_[pos_] == ']') {
        ++pos_;
        break;
      }
      ch.push_back(tree());
    }
    std::reverse(ch.begin(), ch.end());
    return PlanarTree(std::move(ch), label);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool rest_is(std::string_view tok) const { return s_.substr(pos_, tok.size()) == tok; }

  std::string_view s_;
  bool labels_;
  std::size_t pos_ = 0;
};

void write(const PlanarTree& t, bool labels, std::string& out) {
  out += '[';
  if (labels && t.label() != 0) out += std::to_string(t.label());
  for (auto it = t.children().rbegin(); it != t.children().rend(); ++it) write(*it, labels, out);
  out += ']';
}

std::string write_forest(const OrderedForest& x, bool labels) {
  if (x.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ' ';
    write(x[i], labels, out);
  }
  return out;
}

}  // namespace

OrderedForest parse_forest(std::string_view text) { return Parser(text, false).forest(); }

OrderedForest parse_labeled_forest(std::string_view text) { return Parser(text, true).forest(); }

PlanarTree parse_tree(std::string_view text) {
  OrderedForest f = parse_forest(text);
  if (f.size() != 1) throw ParseError("expected exactly one tree", 0);
  return f[0];
}

std::string to_string(const PlanarTree& t) {
  std::string out;
  write(t, false, out);
  return out;
}

std::string to_string(const OrderedForest& x) { return write_forest(x, false); }

std::string to_string(const NonPlanarTree& t) { return to_string(t.planar()); }

std::string to_string(const Forest& f) {
  if (f.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ' ';
    out += to_string(f.trees()[i]);
  }
  return out;
}

std::string to_labeled_string(const PlanarTree& t) {
  std::string out;
  write(t, true, out);
  return out;
}

std::string to_labeled_string(const OrderedForest& x) { return write_forest(x, true); }

}  // namespace lbs
