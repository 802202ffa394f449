#include "lbs/postlie.hpp"

#include <cctype>
#include <functional>

namespace lbs {

ForestComb truncate(const ForestComb& x, std::size_t order) {
  ForestComb out;
  for (const auto& [w, c] : x)
    if (w.vertex_count() <= order) out.add(w, c);
  return out;
}

ForestComb concat(const ForestComb& x, const ForestComb& y) {
  return bilinear(x, y, [](const OrderedForest& a, const OrderedForest& b) { return ForestComb(a * b); });
}

namespace {

void shuffle_rec(const std::vector<PlanarTree>& a, std::size_t i, const std::vector<PlanarTree>& b,
                 std::size_t j, std::vector<PlanarTree>& cur, ForestComb& out) {
  if (i == a.size() && j == b.size()) {
    out.add(OrderedForest(cur), 1);
    return;
  }
  if (i < a.size()) {
    cur.push_back(a[i]);
    shuffle_rec(a, i + 1, b, j, cur, out);
    cur.pop_back();
  }
  if (j < b.size()) {
    cur.push_back(b[j]);
    shuffle_rec(a, i, b, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ForestComb shuffle(const OrderedForest& a, const OrderedForest& b) {
  ForestComb out;
  std::vector<PlanarTree> cur;
  shuffle_rec(a.trees(), 0, b.trees(), 0, cur, out);
  return out;
}

ForestComb shuffle(const ForestComb& x, const ForestComb& y) {
  return bilinear(x, y, [](const OrderedForest& a, const OrderedForest& b) { return shuffle(a, b); });
}

Tensor2<OrderedForest, OrderedForest> delta_shuffle(const OrderedForest& w) {
  Tensor2<OrderedForest, OrderedForest> out;
  const std::size_t k = w.size();
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    std::vector<PlanarTree> l, r;
    for (std::size_t i = 0; i < k; ++i) (mask >> i & 1 ? l : r).push_back(w[i]);
    out.add({OrderedForest(std::move(l)), OrderedForest(std::move(r))}, 1);
  }
  return out;
}

Tensor2<OrderedForest, OrderedForest> delta_shuffle(const ForestComb& x) {
  Tensor2<OrderedForest, OrderedForest> out;
  for (const auto& [w, c] : x) out.add(delta_shuffle(w), c);
  return out;
}

bool is_primitive_shuffle(const ForestComb& x, std::size_t order) {
  ForestComb t = truncate(x, order);
  if (sgn(t.coeff(OrderedForest{})) != 0) return false;
  Tensor2<OrderedForest, OrderedForest> expected;
  for (const auto& [w, c] : t) {
    expected.add({OrderedForest{}, w}, c);
    expected.add({w, OrderedForest{}}, c);
  }
  return delta_shuffle(t) == expected;
}

namespace {

// Rebuilds t with extra[p] prepended to the children of the vertex whose
// preorder index is p.
PlanarTree rebuild(const PlanarTree& t, std::size_t& counter,
                   const std::vector<std::vector<PlanarTree>>& extra) {
  const std::size_t me = counter++;
  std::vector<PlanarTree> ch = extra[me];
  for (const auto& c : t.children()) ch.push_back(rebuild(c, counter, extra));
  return PlanarTree(std::move(ch), t.label());
}

}  // namespace

ForestComb left_graft(const OrderedForest& w1, const OrderedForest& w2) {
  ForestComb out;
  if (w1.empty()) {
    out.add(w2, 1);
    return out;
  }
  const std::size_t v = w2.vertex_count();
  const std::size_t k = w1.size();
  if (v == 0) return out;
  std::vector<std::size_t> assign(k, 0);
  for (;;) {
    std::vector<std::vector<PlanarTree>> extra(v);
    for (std::size_t i = 0; i < k; ++i) extra[assign[i]].push_back(w1[i]);
    std::size_t counter = 0;
    std::vector<PlanarTree> ts;
    for (const auto& t : w2.trees()) ts.push_back(rebuild(t, counter, extra));
    out.add(OrderedForest(std::move(ts)), 1);
    std::size_t i = 0;
    while (i < k && ++assign[i] == v) assign[i++] = 0;
    if (i == k) break;
  }
  return out;
}

LinComb<PlanarTree> left_graft(const PlanarTree& t1, const PlanarTree& t2) {
  LinComb<PlanarTree> out;
  for (const auto& [w, c] : left_graft(OrderedForest(t1), OrderedForest(t2))) out.add(w[0], c);
  return out;
}

ForestComb left_graft(const ForestComb& x, const ForestComb& y) {
  return bilinear(x, y, [](const OrderedForest& a, const OrderedForest& b) { return left_graft(a, b); });
}

PlanarTree b_plus(const OrderedForest& w) { return PlanarTree(w.trees()); }

OrderedForest b_minus(const PlanarTree& t) { return OrderedForest(t.children()); }

ForestComb gl_product(const OrderedForest& w1, const OrderedForest& w2) {
  ForestComb out;
  for (const auto& [w, c] : left_graft(w1, OrderedForest(b_plus(w2)))) out.add(b_minus(w[0]), c);
  return out;
}

ForestComb gl_product(const ForestComb& x, const ForestComb& y) {
  return bilinear(x, y, [](const OrderedForest& a, const OrderedForest& b) { return gl_product(a, b); });
}

namespace {

using CutResult = LinComb<std::pair<OrderedForest, PlanarTree>>;

// Planar left admissible cuts below the root of t: at each vertex a prefix
// of the outgoing edges is cut; the pruned forests are shuffled together.
CutResult left_cuts(const PlanarTree& t) {
  const auto& ch = t.children();
  std::vector<CutResult> sub;
  sub.reserve(ch.size());
  for (const auto& c : ch) sub.push_back(left_cuts(c));
  CutResult out;
  for (std::size_t j = 0; j <= ch.size(); ++j) {
    CutResult acc;
    acc.add({OrderedForest(std::vector<PlanarTree>(ch.begin(), ch.begin() + j)), PlanarTree({}, t.label())}, 1);
    for (std::size_t i = j; i < ch.size(); ++i) {
      CutResult next;
      for (const auto& [p, a] : acc)
        for (const auto& [q, b] : sub[i]) {
          std::vector<PlanarTree> kids = p.second.children();
          kids.push_back(q.second);
          PlanarTree tree(std::move(kids), t.label());
          for (const auto& [s, c] : shuffle(p.first, q.first)) next.add({s, tree}, a * b * c);
        }
      acc = std::move(next);
    }
    out.add(acc);
  }
  return out;
}

}  // namespace

Tensor2<OrderedForest, OrderedForest> delta_N(const OrderedForest& w) {
  Tensor2<OrderedForest, OrderedForest> out;
  for (const auto& [p, c] : left_cuts(b_plus(w))) out.add({p.first, b_minus(p.second)}, c);
  return out;
}

CharacterMap convolve_N(const CharacterMap& a, const CharacterMap& b) {
  if (a.order() != b.order()) throw std::invalid_argument("truncation order mismatch");
  CharacterMap out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n)
    for (const auto& w : enumerate_ordered_forests(n)) {
      Rational s = 0;
      for (const auto& [p, c] : delta_N(w)) s += c * a(p.first) * b(p.second);
      out.set(w, s);
    }
  return out;
}

LiePoly bracket(const LiePoly& x, const LiePoly& y) { return concat(x, y) - concat(y, x); }

LiePoly lie_graft(const LiePoly& x, const LiePoly& y) { return left_graft(x, y); }

LiePoly postlie_bracket(const LiePoly& x, const LiePoly& y) {
  return left_graft(x, y) - left_graft(y, x) + bracket(x, y);
}

LiePoly tree_generator(const PlanarTree& t) { return LiePoly(OrderedForest(t)); }

namespace {

class LieParser {
 public:
  LieParser(std::string_view s, bool labeled) : s_(s), labeled_(labeled) {}

  LiePoly run() {
    LiePoly x = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
    return x;
  }

 private:
  LiePoly expr() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    if (s_[pos_] == '{') {
      ++pos_;
      LiePoly a = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ',') throw ParseError("expected ','", pos_);
      ++pos_;
      LiePoly b = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '}') throw ParseError("expected '}'", pos_);
      ++pos_;
      return bracket(a, b);
    }
    if (s_.substr(pos_, std::string_view("•").size()) == "•") {
      pos_ += std::string_view("•").size();
      return tree_generator(bullet());
    }
    std::size_t start = pos_;
    int depth = 0;
    do {
      if (pos_ >= s_.size()) throw ParseError("unbalanced brackets", pos_);
      if (s_[pos_] == '[') ++depth;
      else if (s_[pos_] == ']') --depth;
      else if (!std::isspace(static_cast<unsigned char>(s_[pos_])) &&
               !(labeled_ && std::isdigit(static_cast<unsigned char>(s_[pos_]))))
        throw ParseError("unexpected character", pos_);
      ++pos_;
    } while (depth > 0);
    const std::string_view piece = s_.substr(start, pos_ - start);
    return tree_generator(labeled_ ? parse_labeled_forest(piece)[0] : parse_tree(piece));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  bool labeled_;
  std::size_t pos_ = 0;
};

}  // namespace

LiePoly parse_lie(std::string_view text) { return LieParser(text, false).run(); }

LiePoly parse_labeled_lie(std::string_view text) { return LieParser(text, true).run(); }

}  // namespace lbs
