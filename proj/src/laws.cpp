#include "lbs/laws.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>

#include "lbs/io.hpp"
#include "lbs/numeric.hpp"
#include "lbs/postlie.hpp"
#include "lbs/prelie.hpp"
#include "lbs/series.hpp"
#include "lbs/subst.hpp"

namespace lbs {

namespace {

std::string describe(const NonPlanarTree& t) { return to_string(t); }
std::string describe(const PlanarTree& t) { return to_string(t); }
std::string describe(const OrderedForest& w) { return to_string(w); }
std::string describe(const Forest& f) { return to_string(f); }
std::string describe(const ForestComb& x) { return to_string(x); }

template <class T>
using Pools = std::vector<std::vector<T>>;

// Every tuple with entry i drawn from pools[i] (indexed by vertex count),
// by increasing total size, stopping at the first tuple f rejects. Returns
// the rejected tuple's description.
template <class T, class F>
std::optional<std::string> search(const std::vector<const Pools<T>*>& pools, std::size_t max_total,
                                  std::size_t& cases, F&& f) {
  const std::size_t arity = pools.size();
  std::vector<std::size_t> sizes(arity);
  std::vector<const T*> pick(arity);
  std::optional<std::string> found;
  std::function<bool(std::size_t, std::size_t)> choose_items = [&](std::size_t i, std::size_t) -> bool {
    if (i == arity) {
      ++cases;
      if (f(pick)) return true;
      std::string s;
      for (std::size_t k = 0; k < arity; ++k) s += (k ? ", " : "") + describe(*pick[k]);
      found = s;
      return false;
    }
    for (const auto& x : (*pools[i])[sizes[i]]) {
      pick[i] = &x;
      if (!choose_items(i + 1, 0)) return false;
    }
    return true;
  };
  std::function<bool(std::size_t, std::size_t)> choose_sizes = [&](std::size_t i, std::size_t left) -> bool {
    if (i + 1 == arity) {
      if (left >= pools[i]->size()) return true;
      sizes[i] = left;
      return choose_items(0, 0);
    }
    for (std::size_t s = 0; s <= left && s < pools[i]->size(); ++s) {
      sizes[i] = s;
      if (!choose_sizes(i + 1, left - s)) return false;
    }
    return true;
  };
  for (std::size_t total = 0; total <= max_total; ++total)
    if (!choose_sizes(0, total)) break;
  return found;
}

template <class T, class F>
LawResult run_search(const std::vector<const Pools<T>*>& pools, std::size_t max_total, F&& f) {
  LawResult r;
  if (auto bad = search<T>(pools, max_total, r.cases, std::forward<F>(f))) {
    r.ok = false;
    r.counterexample = *bad;
  }
  return r;
}

Pools<NonPlanarTree> tree_pool(std::size_t n) {
  Pools<NonPlanarTree> out(n + 1);
  for (std::size_t k = 1; k <= n; ++k) out[k] = enumerate_nonplanar_trees(k);
  return out;
}

Pools<PlanarTree> planar_pool(std::size_t n) {
  Pools<PlanarTree> out(n + 1);
  for (std::size_t k = 1; k <= n; ++k) out[k] = enumerate_planar_trees(k);
  return out;
}

Pools<OrderedForest> forest_pool(std::size_t n, bool with_empty = true) {
  Pools<OrderedForest> out(n + 1);
  for (std::size_t k = with_empty ? 0 : 1; k <= n; ++k) out[k] = enumerate_ordered_forests(k);
  return out;
}

Pools<Forest> nonplanar_forest_pool(std::size_t n) {
  Pools<Forest> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = enumerate_forests(k);
  return out;
}

Pools<ForestComb> as_combs(const Pools<OrderedForest>& p) {
  Pools<ForestComb> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k)
    for (const auto& w : p[k]) out[k].emplace_back(w);
  return out;
}

// Tree generators up to n vertices, plus brackets of two of them.
Pools<ForestComb> lie_pool(std::size_t n, bool brackets) {
  Pools<ForestComb> out(n + 1);
  std::vector<PlanarTree> trees;
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto& t : enumerate_planar_trees(k)) {
      trees.push_back(t);
      out[k].push_back(tree_generator(t));
    }
  if (brackets)
    for (const auto& a : trees)
      for (const auto& b : trees)
        if (a < b && a.vertex_count() + b.vertex_count() <= n)
          out[a.vertex_count() + b.vertex_count()].push_back(bracket(tree_generator(a), tree_generator(b)));
  return out;
}

LawResult from_report(const Report& rep, std::size_t cases) {
  LawResult r;
  r.ok = rep.ok;
  r.cases = cases;
  if (!rep.ok) r.counterexample = rep.failures.front();
  return r;
}

std::size_t forest_count(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t k = 0; k <= n; ++k) c += enumerate_ordered_forests(k).size();
  return c;
}

LawResult prelie_identity(std::size_t n) {
  const auto p = tree_pool(n);
  return run_search<NonPlanarTree>({&p, &p, &p}, 3 * n, [](const auto& x) {
    return check_prelie_identity(*x[0], *x[1], *x[2]);
  });
}

LawResult postlie_jacobi(std::size_t n) {
  const auto p = lie_pool(n, false);
  auto assoc = [](const LiePoly& x, const LiePoly& y, const LiePoly& z) {
    return left_graft(x, left_graft(y, z)) - left_graft(left_graft(x, y), z);
  };
  return run_search<ForestComb>({&p, &p, &p}, 3 * n, [&](const auto& v) {
    const LiePoly &x = *v[0], &y = *v[1], &z = *v[2];
    const LiePoly j = postlie_bracket(x, postlie_bracket(y, z)) + postlie_bracket(y, postlie_bracket(z, x)) +
                      postlie_bracket(z, postlie_bracket(x, y));
    if (!j.is_zero()) return false;
    if (left_graft(x, bracket(y, z)) != bracket(left_graft(x, y), z) + bracket(y, left_graft(x, z))) return false;
    return left_graft(bracket(x, y), z) == assoc(x, y, z) - assoc(y, x, z);
  });
}

LawResult dalgebra_axioms(std::size_t n) {
  const auto lie = lie_pool(n, true);
  const auto fs = as_combs(forest_pool(n));
  LawResult r = run_search<ForestComb>({&fs}, n, [](const auto& v) {
    return left_graft(ForestComb(OrderedForest{}), *v[0]) == *v[0];
  });
  if (!r.ok) return r;
  LawResult s = run_search<ForestComb>({&lie, &fs, &fs}, 3 * n, [](const auto& v) {
    const ForestComb &x = *v[0], &a = *v[1], &b = *v[2];
    if (left_graft(x, concat(a, b)) != concat(left_graft(x, a), b) + concat(a, left_graft(x, b))) return false;
    return left_graft(concat(x, a), b) == left_graft(x, left_graft(a, b)) - left_graft(left_graft(x, a), b);
  });
  s.cases += r.cases;
  return s;
}

template <class K, class Cop, class Counit>
bool coassociative_counital(const K& w, Cop&& cop, Counit&& counit) {
  const auto d = cop(w);
  if (apply_left(d, cop) != apply_right(d, cop)) return false;
  LinComb<K> left, right;
  for (const auto& [p, c] : d) {
    left.add(p.second, c * counit(p.first));
    right.add(p.first, c * counit(p.second));
  }
  return left == LinComb<K>(w) && right == LinComb<K>(w);
}

LawResult forest_coassoc(std::size_t n, ForestCoproduct which) {
  const auto p = nonplanar_forest_pool(n);
  return run_search<Forest>({&p}, n, [which](const auto& v) {
    if (which == ForestCoproduct::CK)
      return coassociative_counital(*v[0], [](const Forest& f) { return delta_CK(f); }, counit_CK);
    return coassociative_counital(*v[0], [](const Forest& f) { return delta_H(f); }, counit_H);
  });
}

LawResult ck_coassoc(std::size_t n) { return forest_coassoc(n, ForestCoproduct::CK); }
LawResult h_coassoc(std::size_t n) { return forest_coassoc(n, ForestCoproduct::H); }

LawResult n_coassoc(std::size_t n) {
  const auto p = forest_pool(n);
  return run_search<OrderedForest>({&p}, n, [](const auto& v) {
    return coassociative_counital(
        *v[0], [](const OrderedForest& w) { return delta_N(w); },
        [](const OrderedForest& w) { return Rational(w.empty() ? 1 : 0); });
  });
}

LawResult w_coassoc(std::size_t n) { return from_report(check_delta_W_coassociativity(n, PartitionRule::Combinatorial), forest_count(n)); }

LawResult shuffle_bialgebra(std::size_t n) {
  const auto p = forest_pool(n);
  auto mul = [](const OrderedForest& a, const OrderedForest& b) { return ForestComb(a * b); };
  LawResult r = run_search<OrderedForest>({&p, &p}, 2 * n, [&](const auto& v) {
    return delta_shuffle(*v[0] * *v[1]) == tensor_product(delta_shuffle(*v[0]), delta_shuffle(*v[1]), mul, mul);
  });
  if (!r.ok) return r;
  LawResult s = run_search<OrderedForest>({&p}, n, [](const auto& v) {
    for (const auto& [q, c] : delta_shuffle(*v[0]))
      if (shuffle(q.first, q.second).coeff(*v[0]) != c) return false;
    return true;
  });
  s.cases += r.cases;
  return s;
}

LawResult gl_duality(std::size_t n) {
  const auto p = forest_pool(n);
  return run_search<OrderedForest>({&p}, n, [](const auto& v) {
    const OrderedForest& w = *v[0];
    Tensor2<OrderedForest, OrderedForest> expect;
    for (std::size_t k = 0; k <= w.vertex_count(); ++k)
      for (const auto& a : enumerate_ordered_forests(k))
        for (const auto& b : enumerate_ordered_forests(w.vertex_count() - k))
          expect.add({a, b}, gl_product(a, b).coeff(w));
    return delta_N(w) == expect;
  });
}

LawResult h_operad_duality(std::size_t n) {
  const auto p = tree_pool(n);
  return run_search<NonPlanarTree>({&p}, n, [n](const auto& v) { return check_H_operad_duality(*v[0], n); });
}

PlanarTree label_preorder(const PlanarTree& t, int& next) {
  const int l = next++;
  std::vector<PlanarTree> ch;
  for (const auto& c : t.children()) ch.push_back(label_preorder(c, next));
  return PlanarTree(std::move(ch), l);
}

std::size_t preorder_index_of(const PlanarTree& t, int label) {
  std::size_t i = 0, found = SIZE_MAX;
  std::function<void(const PlanarTree&)> walk = [&](const PlanarTree& s) {
    if (s.label() == label) found = i;
    ++i;
    for (const auto& c : s.children()) walk(c);
  };
  walk(t);
  return found;
}

// x ∘_v y: y replaces vertex v of base, every other vertex becomes •.
TreeComb partial(const NonPlanarTree& base, std::size_t v, const NonPlanarTree& y) {
  const std::size_t n = base.vertex_count();
  std::vector<NonPlanarTree> inputs(n, canonicalize(bullet()));
  inputs[0] = y;
  std::vector<std::size_t> assignment(n);
  for (std::size_t i = 0, next = 1; i < n; ++i) assignment[i] = i == v ? 0 : next++;
  return compose_prelie_operad(inputs, base, assignment);
}

TreeComb unlabeled(const TreeComb& x) {
  TreeComb out;
  for (const auto& [t, c] : x) out.add(canonicalize(t.planar().without_labels()), c);
  return out;
}

// (x ∘_v y) ∘_w z = x ∘_v (y ∘_w z) for w a vertex of y.
LawResult operad_assoc(std::size_t n) {
  const auto p = tree_pool(std::min<std::size_t>(n, 3));
  return run_search<NonPlanarTree>({&p, &p, &p}, n, [](const auto& v) {
    const NonPlanarTree &x = *v[0], &y = *v[1], &z = *v[2];
    int next = 1;
    const NonPlanarTree ly = canonicalize(label_preorder(y.planar(), next));
    for (std::size_t i = 0; i < x.vertex_count(); ++i)
      for (std::size_t j = 0; j < y.vertex_count(); ++j) {
        TreeComb lhs;
        for (const auto& [t, c] : partial(x, i, ly))
          lhs.add(partial(t, preorder_index_of(t.planar(), static_cast<int>(j) + 1), z), c);
        TreeComb rhs;
        for (const auto& [t, c] : partial(y, j, z)) rhs.add(partial(x, i, t), c);
        if (unlabeled(lhs) != unlabeled(rhs)) return false;
      }
    return true;
  });
}

LawResult cointeraction(std::size_t n) { return from_report(check_cointeraction(n), forest_count(n)); }

LawResult pi_morphism(std::size_t n) {
  const auto p = planar_pool(n);
  return run_search<PlanarTree>({&p}, n, [](const auto& v) { return check_pi_morphism(*v[0]); });
}

LawResult grading(std::size_t n) {
  const auto p = forest_pool(n, false);
  return run_search<OrderedForest>({&p}, n, [](const auto& v) {
    const long size = static_cast<long>(v[0]->vertex_count());
    for (const auto& [t, c] : delta_W(*v[0])) {
      long g = static_cast<long>(t.second.vertex_count()) - 1;
      for (const auto& part : t.first.parts()) g += static_cast<long>(part.vertex_count()) - 1;
      if (g != size - 1) return false;
    }
    return true;
  });
}

// Random trials in a fixed order: trial t uses seed t+1.
template <class F>
LawResult trials(std::size_t count, F&& f) {
  LawResult r;
  for (std::size_t t = 0; t < count; ++t) {
    std::mt19937 rng(static_cast<unsigned>(t + 1));
    ++r.cases;
    if (!f(rng)) {
      r.ok = false;
      r.counterexample = "random trial " + std::to_string(t) + " (seed " + std::to_string(t + 1) + ")";
      return r;
    }
  }
  return r;
}

LawResult adjoint(std::size_t n) {
  return trials(4, [n](std::mt19937& rng) {
    return check_adjoint(logarithmic_from(random_character(n, rng, std::min<std::size_t>(n, 3))), n);
  });
}

LawResult substitution_theorem(std::size_t n) {
  return trials(4, [n](std::mt19937& rng) {
    auto alpha = logarithmic_from(random_character(n, rng, std::min<std::size_t>(n, 3)));
    return check_substitution_theorem(alpha, random_character(n, rng, n, 1), n);
  });
}

ForestCharacter random_tree_character(std::size_t order, std::mt19937& rng, const Rational& empty) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  ForestCharacter a(order, empty);
  for (std::size_t k = 1; k <= order; ++k)
    for (const auto& t : enumerate_nonplanar_trees(k)) a.set(Forest(t), Rational(num(rng), den(rng)));
  return a;
}

LawResult bseries_substitution(std::size_t n) {
  const PolyVectorField square(1, {monomial(1, 1, {2})});
  const PolyVectorField quad(2, {monomial(2, 1, {0, 1}) + monomial(2, Rational(1, 2), {2, 0}),
                                 monomial(2, -1, {1, 0}) + monomial(2, 3, {1, 1}) + monomial(2, 2, {0, 0})});
  const PolyVectorField linear(2, {monomial(2, 2, {1, 0}) + monomial(2, -1, {0, 1}),
                                   monomial(2, Rational(1, 3), {1, 0}) + monomial(2, 1, {0, 0})});
  return trials(3, [&](std::mt19937& rng) {
    auto a = random_tree_character(n, rng, 0);
    auto b = random_tree_character(n, rng, 1);
    return verify_bseries_substitution(a, b, square, {Rational(3, 2)}, n) &&
           verify_bseries_substitution(a, b, quad, {Rational(-1), Rational(1, 3)}, n) &&
           verify_bseries_substitution(a, b, linear, {Rational(2), Rational(-5)}, n);
  });
}

LawResult automorphism(std::size_t n) {
  return trials(3, [n](std::mt19937& rng) {
    auto alpha = logarithmic_from(random_character(n, rng, std::min<std::size_t>(n, 3)));
    auto beta = exponential_from(logarithmic_from(random_character(n, rng, n)));
    auto gamma = exponential_from(logarithmic_from(random_character(n, rng, n)));
    return check_automorphism(alpha, beta, gamma) &&
           check_automorphism(alpha, random_character(n, rng, n, 1), random_character(n, rng, n, 2));
  });
}

}  // namespace

const std::vector<Law>& law_registry() {
  static const std::vector<Law> laws{
      {"prelie-identity", "graft satisfies the pre-Lie identity on tree triples", 3, prelie_identity},
      {"postlie-jacobi", "post-Lie axioms and Jacobi for the derived bracket", 3, postlie_jacobi},
      {"dalgebra-axioms", "left grafting by Lie elements is a D-algebra action", 3, dalgebra_axioms},
      {"ck-coassoc", "Connes-Kreimer coproduct is coassociative and counital", 5, ck_coassoc},
      {"h-coassoc", "extraction-contraction coproduct is coassociative and counital", 5, h_coassoc},
      {"n-coassoc", "Δ_N is coassociative and counital", 5, n_coassoc},
      {"w-coassoc", "Δ_W is coassociative with its counit on symmetric words", 4, w_coassoc},
      {"shuffle-bialgebra", "Δ⧢ is a concatenation morphism dual to ⧢", 3, shuffle_bialgebra},
      {"gl-duality", "Δ_N is dual to the Grossman-Larson product", 5, gl_duality},
      {"h-operad-duality", "Δ_H equals the labeled pre-Lie operad dual", 4, h_operad_duality},
      {"operad-assoc", "pre-Lie operad partial compositions are associative", 6, operad_assoc},
      {"cointeraction", "ρ is a Δ_N-compatible coaction", 3, cointeraction},
      {"pi-morphism", "tree part of Δ_W maps to Δ_H when planarity is forgotten", 4, pi_morphism},
      {"grading", "Δ_W respects the vertex grading", 4, grading},
      {"adjoint", "A_α is adjoint to A_α† for logarithmic α", 4, adjoint},
      {"substitution-theorem", "A_α(ω) is the series of α⋆_W δ(ω)", 4, substitution_theorem},
      {"bseries-substitution", "B-series substitution matches α⋆_H β", 4, bseries_substitution},
      {"automorphism", "α⋆_W is a ⋆_N automorphism preserving exponentials", 4, automorphism},
  };
  return laws;
}

std::vector<std::string> verify_registry() {
  std::vector<std::string> out;
  for (const auto& l : law_registry()) out.push_back(l.name);
  return out;
}

const Law& find_law(std::string_view name) {
  for (const auto& l : law_registry())
    if (l.name == name) return l;
  throw std::invalid_argument("unknown law: " + std::string(name));
}

LawResult run_law(std::string_view name, std::optional<std::size_t> order) {
  const Law& l = find_law(name);
  return l.run(order.value_or(l.default_order));
}

}  // namespace lbs
