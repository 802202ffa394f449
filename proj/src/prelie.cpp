#include "lbs/prelie.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "flat.hpp"

namespace lbs {

namespace {

// Rebuilds t appending extra[p] to the children of preorder vertex p.
PlanarTree attach(const PlanarTree& t, std::size_t& counter, const std::vector<std::vector<PlanarTree>>& extra) {
  const std::size_t me = counter++;
  std::vector<PlanarTree> ch;
  for (const auto& c : t.children()) ch.push_back(attach(c, counter, extra));
  ch.insert(ch.end(), extra[me].begin(), extra[me].end());
  return PlanarTree(std::move(ch), t.label());
}

// Sum over all maps from the pieces to vertices of host.
LinComb<PlanarTree> attach_all(const PlanarTree& host, const std::vector<PlanarTree>& pieces) {
  LinComb<PlanarTree> out;
  const std::size_t v = host.vertex_count();
  std::vector<std::size_t> assign(pieces.size(), 0);
  for (;;) {
    std::vector<std::vector<PlanarTree>> extra(v);
    for (std::size_t i = 0; i < pieces.size(); ++i) extra[assign[i]].push_back(pieces[i]);
    std::size_t counter = 0;
    out.add(attach(host, counter, extra), 1);
    std::size_t i = 0;
    while (i < pieces.size() && ++assign[i] == v) assign[i++] = 0;
    if (i == pieces.size()) break;
  }
  return out;
}

TreeComb canonical(const LinComb<PlanarTree>& x) {
  TreeComb out;
  for (const auto& [t, c] : x) out.add(canonicalize(t), c);
  return out;
}

}  // namespace

TreeComb graft(const NonPlanarTree& t1, const NonPlanarTree& t2) {
  return canonical(attach_all(t2.planar(), {t1.planar()}));
}

TreeComb graft(const TreeComb& x, const TreeComb& y) {
  return bilinear(x, y, [](const NonPlanarTree& a, const NonPlanarTree& b) { return graft(a, b); });
}

bool check_prelie_identity(const NonPlanarTree& a, const NonPlanarTree& b, const NonPlanarTree& c) {
  TreeComb A(a), B(b), C(c);
  TreeComb lhs = graft(A, graft(B, C)) - graft(graft(A, B), C);
  TreeComb rhs = graft(B, graft(A, C)) - graft(graft(B, A), C);
  return lhs == rhs;
}

namespace {

LinComb<PlanarTree> compose_at(const PlanarTree& v, std::size_t& counter,
                               const std::vector<NonPlanarTree>& inputs,
                               const std::vector<std::size_t>& assignment) {
  const std::size_t me = counter++;
  const PlanarTree& host = inputs.at(assignment.at(me)).planar();
  std::vector<LinComb<PlanarTree>> subs;
  for (const auto& c : v.children()) subs.push_back(compose_at(c, counter, inputs, assignment));
  LinComb<PlanarTree> out;
  // Iterate over one term from each child's expansion.
  std::vector<LinComb<PlanarTree>::const_iterator> it;
  for (const auto& s : subs) {
    if (s.is_zero()) return out;
    it.push_back(s.begin());
  }
  for (;;) {
    std::vector<PlanarTree> pieces;
    Rational coef = 1;
    for (const auto& i : it) {
      pieces.push_back(i->first);
      coef *= i->second;
    }
    out.add(attach_all(host, pieces), coef);
    std::size_t k = 0;
    while (k < it.size() && ++it[k] == subs[k].end()) it[k] = subs[k].begin(), ++k;
    if (k == it.size()) break;
  }
  return out;
}

void check_bijection(const std::vector<std::size_t>& assignment, std::size_t n) {
  if (assignment.size() != n) throw std::invalid_argument("arity mismatch");
  std::vector<bool> seen(n, false);
  for (auto a : assignment) {
    if (a >= n || seen[a]) throw std::invalid_argument("assignment is not a bijection");
    seen[a] = true;
  }
}

void preorder_labels(const PlanarTree& t, std::vector<std::size_t>& out) {
  out.push_back(static_cast<std::size_t>(t.label()));
  for (const auto& c : t.children()) preorder_labels(c, out);
}

}  // namespace

TreeComb compose_prelie_operad(const std::vector<NonPlanarTree>& inputs, const NonPlanarTree& base,
                               const std::vector<std::size_t>& assignment) {
  if (inputs.size() != base.vertex_count()) throw std::invalid_argument("arity mismatch");
  check_bijection(assignment, inputs.size());
  std::size_t counter = 0;
  return canonical(compose_at(base.planar(), counter, inputs, assignment));
}

TreeComb compose_prelie_operad(const std::vector<NonPlanarTree>& inputs, const NonPlanarTree& base) {
  std::vector<std::size_t> labels;
  preorder_labels(base.planar(), labels);
  for (auto& l : labels) {
    if (l == 0) throw std::invalid_argument("base vertices must be labeled 1..n");
    --l;
  }
  return compose_prelie_operad(inputs, base, labels);
}

TreeComb compose_prelie_all_couplings(const std::vector<NonPlanarTree>& inputs, const NonPlanarTree& base) {
  if (inputs.size() != base.vertex_count()) throw std::invalid_argument("arity mismatch");
  std::vector<std::size_t> perm(inputs.size());
  std::iota(perm.begin(), perm.end(), 0);
  TreeComb out;
  do {
    out += compose_prelie_operad(inputs, base, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

using CutTerms = LinComb<std::pair<Forest, PlanarTree>>;

// Admissible cuts strictly below the root of t (the root is kept).
CutTerms ck_cuts(const PlanarTree& t) {
  CutTerms acc;
  acc.add({Forest{}, PlanarTree({}, t.label())}, 1);
  for (const auto& c : t.children()) {
    CutTerms sub = ck_cuts(c);
    CutTerms next;
    for (const auto& [p, a] : acc) {
      next.add({p.first * Forest(canonicalize(c)), p.second}, a);
      for (const auto& [q, b] : sub) {
        std::vector<PlanarTree> kids = p.second.children();
        kids.push_back(q.second);
        next.add({p.first * q.first, PlanarTree(std::move(kids), t.label())}, a * b);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

ForestTensor forest_product(const ForestTensor& x, const ForestTensor& y) {
  auto mul = [](const Forest& a, const Forest& b) { return LinComb<Forest>(a * b); };
  return tensor_product(x, y, mul, mul);
}

ForestTensor unit_tensor() { return ForestTensor({Forest{}, Forest{}}); }

}  // namespace

ForestTensor delta_CK(const Forest& f) {
  ForestTensor out = unit_tensor();
  for (const auto& t : f.trees()) {
    ForestTensor dt;
    dt.add({Forest(t), Forest{}}, 1);
    for (const auto& [p, c] : ck_cuts(t.planar())) dt.add({p.first, Forest(canonicalize(p.second))}, c);
    out = forest_product(out, dt);
  }
  return out;
}

ForestTensor delta_H(const Forest& f) {
  std::vector<PlanarTree> ts;
  for (const auto& t : f.trees()) ts.push_back(t.planar());
  const detail::Flat g = detail::flatten(ts);
  const int n = static_cast<int>(g.size());
  std::vector<int> edges;  // child endpoint of each edge
  for (int v = 0; v < n; ++v)
    if (g.parent[v] >= 0) edges.push_back(v);
  ForestTensor out;
  for (unsigned long mask = 0; mask < (1ul << edges.size()); ++mask) {
    std::vector<bool> kept(n, false);
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (mask >> e & 1) kept[edges[e]] = true;
    // A vertex heads a part when its incoming edge is cut or absent.
    auto head = [&](int v) { return g.parent[v] < 0 || !kept[v]; };
    std::vector<NonPlanarTree> parts;
    for (int v = 0; v < n; ++v)
      if (head(v)) parts.push_back(canonicalize(detail::induced(g, v, [&](int c) { return kept[c]; })));
    // Contraction: a part's children are the parts headed just below it.
    std::function<PlanarTree(int)> quotient = [&](int v) {
      std::vector<PlanarTree> ch;
      std::vector<int> stack{v};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int c : g.children[u]) {
          if (kept[c])
            stack.push_back(c);
          else
            ch.push_back(quotient(c));
        }
      }
      return PlanarTree(std::move(ch));
    };
    std::vector<NonPlanarTree> contracted;
    for (int r : g.roots) contracted.push_back(canonicalize(quotient(r)));
    out.add({Forest(std::move(parts)), Forest(std::move(contracted))}, 1);
  }
  return out;
}

Rational counit_CK(const Forest& f) { return f.empty() ? 1 : 0; }

Rational counit_H(const Forest& f) { return f.vertex_count() == f.size() ? 1 : 0; }

namespace {

// Set partitions of {0..n-1} as block index per element.
template <class F>
void set_partitions(int n, F&& f) {
  std::vector<int> a(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      f(a, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0)
    f(a, 0);
  else
    rec(0, 0);
}

std::vector<NonPlanarTree> labeled_trees(std::size_t k) {
  std::set<NonPlanarTree> out;
  for (const auto& t : enumerate_nonplanar_trees(k)) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::size_t idx = 0;
      std::function<PlanarTree(const PlanarTree&)> lab = [&](const PlanarTree& s) {
        int l = perm[idx++];
        std::vector<PlanarTree> ch;
        for (const auto& c : s.children()) ch.push_back(lab(c));
        return PlanarTree(std::move(ch), l);
      };
      out.insert(canonicalize(lab(t.planar())));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {out.begin(), out.end()};
}

}  // namespace

ForestTensor h_operad_dual(const NonPlanarTree& t, std::size_t guard) {
  const std::size_t n = t.vertex_count();
  if (n > guard) throw std::invalid_argument("tree exceeds oracle guard");
  // Distinct labels 1..n in preorder.
  std::size_t idx = 0;
  std::function<PlanarTree(const PlanarTree&)> lab = [&](const PlanarTree& s) {
    int l = static_cast<int>(++idx);
    std::vector<PlanarTree> ch;
    for (const auto& c : s.children()) ch.push_back(lab(c));
    return PlanarTree(std::move(ch), l);
  };
  const PlanarTree tl = lab(t.planar());
  const NonPlanarTree target = canonicalize(tl);
  const detail::Flat g = detail::flatten({tl});
  ForestTensor out;
  set_partitions(static_cast<int>(n), [&](const std::vector<int>& block, int k) {
    // Each block must induce a connected subtree: exactly one vertex whose
    // parent lies outside the block.
    std::vector<int> heads;
    for (int v = 0; v < static_cast<int>(n); ++v)
      if (g.parent[v] < 0 || block[g.parent[v]] != block[v]) heads.push_back(v);
    if (static_cast<int>(heads.size()) != k) return;
    std::vector<NonPlanarTree> pieces(k);
    for (int h : heads)
      pieces[block[h]] = canonicalize(detail::induced(g, h, [&](int c) { return block[c] == block[h]; }));
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    Rational weight = 1;
    for (int i = 2; i <= k; ++i) weight /= i;
    const auto bases = labeled_trees(k);
    std::vector<NonPlanarTree> unlabeled;
    for (const auto& p : pieces) unlabeled.push_back(canonicalize(p.planar().without_labels()));
    const Forest left(unlabeled);
    do {
      std::vector<NonPlanarTree> inputs;
      for (int i : order) inputs.push_back(pieces[i]);
      for (const auto& base : bases) {
        Rational c = compose_prelie_operad(inputs, base).coeff(target);
        if (sgn(c) != 0)
          out.add({left, Forest(canonicalize(base.planar().without_labels()))}, weight * c);
      }
    } while (std::next_permutation(order.begin(), order.end()));
  });
  return out;
}

bool check_H_operad_duality(const NonPlanarTree& t, std::size_t guard) {
  return h_operad_dual(t, guard) == delta_H(Forest(t));
}

ForestCharacter convolve(const ForestCharacter& a, const ForestCharacter& b, ForestCoproduct which) {
  if (a.order() != b.order()) throw std::invalid_argument("truncation order mismatch");
  const std::size_t n = a.order();
  auto left = [&](const Forest& f) -> Rational {
    if (which == ForestCoproduct::CK) return a(f);
    Rational p = 1;
    for (const auto& t : f.trees()) p *= a(Forest(t));
    return p;
  };
  ForestCharacter out(n);
  for (std::size_t m = 0; m <= n; ++m)
    for (const auto& f : enumerate_forests(m)) {
      ForestTensor d = which == ForestCoproduct::CK ? delta_CK(f) : delta_H(f);
      Rational s = 0;
      for (const auto& [p, c] : d) s += c * left(p.first) * b(p.second);
      out.set(f, s);
    }
  return out;
}

}  // namespace lbs
