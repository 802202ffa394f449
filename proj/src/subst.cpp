#include "lbs/subst.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

#include "flat.hpp"
#include "lbs/io.hpp"
#include "lbs/linalg.hpp"
#include "lbs/prelie.hpp"

namespace lbs {

namespace {

using detail::Flat;
using detail::flatten;
using detail::induced;

template <class F>
void for_each_set_partition(std::size_t n, F&& f) {
  std::vector<int> a(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int m) {
    if (i == n) {
      f(a, m);
      return;
    }
    for (int b = 0; b <= m && b < static_cast<int>(n); ++b) {
      a[i] = b;
      rec(i + 1, std::max(m, b + 1));
    }
  };
  if (n == 0)
    f(a, 0);
  else
    rec(1, 1);
}

std::vector<int> sibling_positions(const Flat& f) {
  std::vector<int> pos(f.size());
  for (std::size_t i = 0; i < f.roots.size(); ++i) pos[f.roots[i]] = static_cast<int>(i);
  for (const auto& ch : f.children)
    for (std::size_t i = 0; i < ch.size(); ++i) pos[ch[i]] = static_cast<int>(i);
  return pos;
}

bool is_part_root(const Flat& f, const std::vector<int>& block, int v) {
  return f.parent[v] < 0 || block[f.parent[v]] != block[v];
}

bool admissible(const Flat& f, const std::vector<int>& block, int nb) {
  const auto pos = sibling_positions(f);
  std::vector<int> par(nb, -2);
  std::vector<std::vector<int>> rp(nb);
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (!is_part_root(f, block, static_cast<int>(v))) continue;
    const int b = block[v];
    if (par[b] == -2)
      par[b] = f.parent[v];
    else if (par[b] != f.parent[v])
      return false;
    rp[b].push_back(pos[v]);
  }
  for (auto& r : rp) {
    std::sort(r.begin(), r.end());
    for (std::size_t i = 1; i < r.size(); ++i)
      if (r[i] != r[i - 1] + 1) return false;
  }
  // Children inside the parent's part must form a suffix.
  for (std::size_t u = 0; u < f.size(); ++u) {
    bool inside = false;
    for (int c : f.children[u]) {
      const bool same = block[c] == block[u];
      if (inside && !same) return false;
      inside = inside || same;
    }
  }
  return true;
}

std::vector<int> normalized(const std::vector<int>& block, int& nb) {
  std::map<int, int> rename;
  std::vector<int> out(block.size());
  for (std::size_t i = 0; i < block.size(); ++i) {
    auto [it, fresh] = rename.try_emplace(block[i], static_cast<int>(rename.size()));
    out[i] = it->second;
  }
  nb = static_cast<int>(rename.size());
  return out;
}

AdmissiblePartition build(const OrderedForest& host, const Flat& f, const std::vector<int>& block, int nb) {
  const auto pos = sibling_positions(f);
  AdmissiblePartition p;
  p.host = host;
  p.block = block;
  p.root_parent.assign(nb, -1);
  p.root_positions.assign(nb, {});
  std::vector<std::vector<std::pair<int, int>>> roots(nb);
  for (std::size_t v = 0; v < f.size(); ++v)
    if (is_part_root(f, block, static_cast<int>(v))) {
      roots[block[v]].push_back({pos[v], static_cast<int>(v)});
      p.root_parent[block[v]] = f.parent[v];
    }
  for (int b = 0; b < nb; ++b) {
    std::sort(roots[b].begin(), roots[b].end());
    std::vector<PlanarTree> trees;
    for (auto [ps, v] : roots[b]) {
      p.root_positions[b].push_back(ps);
      trees.push_back(induced(f, v, [&](int c) { return block[c] == b; }));
    }
    p.parts.emplace_back(std::move(trees));
  }
  return p;
}

// Calls emit on every interleaving of seqs that keeps each sequence's order.
void interleavings(const std::vector<std::vector<int>>& seqs, std::vector<std::size_t>& at, std::vector<int>& cur,
                   std::size_t total, const std::function<void(const std::vector<int>&)>& emit) {
  if (cur.size() == total) {
    emit(cur);
    return;
  }
  for (std::size_t s = 0; s < seqs.size(); ++s) {
    if (at[s] == seqs[s].size()) continue;
    cur.push_back(seqs[s][at[s]++]);
    interleavings(seqs, at, cur, total, emit);
    --at[s];
    cur.pop_back();
  }
}

ForestComb unit_comb() { return ForestComb(OrderedForest{}); }

ForestComb single(const OrderedForest& w) { return ForestComb(w); }

struct LieCache {
  std::mutex mu;
  std::map<std::vector<PlanarTree>, std::vector<LiePoly>> bases;
};

LieCache& lie_cache() {
  static LieCache c;
  return c;
}

// Orthogonal basis of the Lie polynomials that use each letter once.
std::vector<LiePoly> lie_basis(std::vector<PlanarTree> letters) {
  std::sort(letters.begin(), letters.end());
  auto& cache = lie_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.bases.find(letters);
    if (it != cache.bases.end()) return it->second;
  }
  std::vector<LiePoly> brackets;
  std::vector<PlanarTree> perm = letters;
  do {
    LiePoly x = single(OrderedForest(perm[0]));
    for (std::size_t i = 1; i < perm.size(); ++i) x = bracket(x, single(OrderedForest(perm[i])));
    brackets.push_back(std::move(x));
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto basis = orthogonal_basis(brackets);
  std::lock_guard lock(cache.mu);
  cache.bases.emplace(letters, basis);
  return basis;
}

OrderedForest label_preorder(const OrderedForest& w) {
  int next = 1;
  std::function<PlanarTree(const PlanarTree&)> rec = [&](const PlanarTree& t) {
    const int me = next++;
    std::vector<PlanarTree> ch;
    for (const auto& c : t.children()) ch.push_back(rec(c));
    return PlanarTree(std::move(ch), me);
  };
  std::vector<PlanarTree> trees;
  for (const auto& t : w.trees()) trees.push_back(rec(t));
  return OrderedForest(std::move(trees));
}

std::vector<std::size_t> check_assignment(std::size_t n, const std::vector<std::size_t>& assignment) {
  if (assignment.size() != n) throw std::invalid_argument("arity mismatch");
  std::vector<bool> seen(n, false);
  for (auto a : assignment) {
    if (a >= n || seen[a]) throw std::invalid_argument("assignment is not a bijection");
    seen[a] = true;
  }
  return assignment;
}

ForestComb compose_tree(const PlanarTree& t, std::size_t& counter, const std::vector<ForestComb>& inputs,
                        const std::vector<std::size_t>& assignment) {
  const std::size_t me = counter++;
  ForestComb below = unit_comb();
  for (const auto& c : t.children()) below = concat(below, compose_tree(c, counter, inputs, assignment));
  return left_graft(below, inputs[assignment[me]]);
}

const std::vector<OrderedForest>& forests_of(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<OrderedForest>> memo;
  std::lock_guard lock(mu);
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, enumerate_ordered_forests(n)).first;
  return it->second;
}

SymLieWord lie_product(const SymLieWord& a, const SymLieWord& b) {
  std::vector<LiePoly> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return SymLieWord::normalize(std::move(f)).second;
}

}  // namespace

bool is_admissible(const OrderedForest& host, const std::vector<int>& block) {
  const Flat f = flatten(host.trees());
  if (block.size() != f.size()) return false;
  int nb = 0;
  auto b = normalized(block, nb);
  return admissible(f, b, nb);
}

AdmissiblePartition make_partition(const OrderedForest& host, const std::vector<int>& block) {
  const Flat f = flatten(host.trees());
  if (block.size() != f.size()) throw std::invalid_argument("partition does not cover the forest");
  int nb = 0;
  auto b = normalized(block, nb);
  if (!admissible(f, b, nb)) throw std::invalid_argument("partition is not admissible");
  return build(host, f, b, nb);
}

std::vector<AdmissiblePartition> admissible_partitions(const OrderedForest& w, PartitionRule rule) {
  const Flat f = flatten(w.trees());
  std::vector<AdmissiblePartition> out;
  if (f.size() == 0) return out;
  for_each_set_partition(f.size(), [&](const std::vector<int>& block, int nb) {
    if (!admissible(f, block, nb)) return;
    auto p = build(w, f, block, nb);
    if (rule == PartitionRule::LieRealizable)
      for (const auto& part : p.parts)
        if (lie_projection(part.without_labels()).is_zero()) return;
    out.push_back(std::move(p));
  });
  return out;
}

ForestComb contract(const AdmissiblePartition& p) {
  const std::size_t nb = p.parts.size();
  if (nb == 0) return unit_comb();
  // Children of each part, grouped by the host vertex they hang from.
  std::vector<std::map<int, std::vector<std::pair<int, int>>>> groups(nb);
  std::vector<std::pair<int, int>> top;
  for (std::size_t b = 0; b < nb; ++b) {
    const int first = p.root_positions[b].front();
    const int parent = p.root_parent[b];
    if (parent < 0)
      top.push_back({first, static_cast<int>(b)});
    else
      groups[p.block[parent]][parent].push_back({first, static_cast<int>(b)});
  }
  std::sort(top.begin(), top.end());
  std::function<ForestComb(int)> sub = [&](int b) {
    std::vector<std::vector<int>> seqs;
    std::size_t total = 0;
    for (auto& [v, g] : groups[b]) {
      std::sort(g.begin(), g.end());
      seqs.emplace_back();
      for (auto [ps, c] : g) seqs.back().push_back(c);
      total += g.size();
    }
    std::map<int, ForestComb> below;
    for (const auto& s : seqs)
      for (int c : s) below.emplace(c, sub(c));
    ForestComb out;
    std::vector<std::size_t> at(seqs.size(), 0);
    std::vector<int> cur;
    interleavings(seqs, at, cur, total, [&](const std::vector<int>& order) {
      ForestComb kids = unit_comb();
      for (int c : order) kids = concat(kids, below.at(c));
      for (const auto& [k, coef] : kids) out.add(OrderedForest(b_plus(k)), coef);
    });
    return out;
  };
  ForestComb out = unit_comb();
  for (auto [ps, b] : top) out = concat(out, sub(b));
  return out;
}

WTensor delta_W(const OrderedForest& w, PartitionRule rule) {
  WTensor out;
  if (w.empty()) {
    out.add({SymWord{}, OrderedForest{}}, 1);
    return out;
  }
  for (const auto& p : admissible_partitions(w, rule)) {
    SymWord left(p.parts);
    for (const auto& [r, c] : contract(p)) out.add({left, r}, c);
  }
  return out;
}

Tensor2<SymWord, SymWord> delta_W(const SymWord& w, PartitionRule rule) {
  Tensor2<SymWord, SymWord> out;
  out.add({SymWord{}, SymWord{}}, 1);
  for (const auto& part : w.parts()) {
    Tensor2<SymWord, SymWord> next;
    const auto d = delta_W(part, rule);
    for (const auto& [a, ca] : out)
      for (const auto& [b, cb] : d) next.add({a.first * b.first, a.second * SymWord(b.second)}, ca * cb);
    out = std::move(next);
  }
  return out;
}

Rational counit_W(const SymWord& w) {
  for (const auto& p : w.parts())
    if (p.size() != 1 || p.vertex_count() != 1) return 0;
  return 1;
}

LiePoly lie_projection(const OrderedForest& word) {
  if (word.empty()) return {};
  if (word.size() == 1) return single(word);
  return project(single(word), lie_basis(word.trees()));
}

LiePoly lie_projection(const ForestComb& x) {
  LiePoly out;
  for (const auto& [w, c] : x) out.add(lie_projection(w), c);
  return out;
}

std::size_t SymLieWord::vertex_count() const {
  std::size_t n = 0;
  for (const auto& f : factors_)
    if (!f.is_zero()) n += f.begin()->first.vertex_count();
  return n;
}

std::pair<Rational, SymLieWord> SymLieWord::normalize(std::vector<LiePoly> factors) {
  Rational scalar = 1;
  SymLieWord out;
  for (auto& f : factors) {
    if (f.is_zero()) return {Rational(0), SymLieWord{}};
    const Rational lead = f.begin()->second;
    scalar *= lead;
    f *= Rational(1) / lead;
    out.factors_.push_back(std::move(f));
  }
  std::sort(out.factors_.begin(), out.factors_.end());
  scalar.canonicalize();
  return {scalar, out};
}

std::string to_string(const SymLieWord& w) {
  if (w.size() == 0) return "1";
  std::string s;
  for (const auto& f : w.factors()) {
    if (!s.empty()) s += " & ";
    s += f.size() == 1 && f.begin()->second == 1 ? to_string(f.begin()->first) : "(" + to_string(f) + ")";
  }
  return s;
}

ForestComb compose_module(const std::vector<ForestComb>& inputs, const OrderedForest& base,
                          const std::vector<std::size_t>& assignment) {
  const std::size_t n = base.vertex_count();
  if (inputs.size() != n) throw std::invalid_argument("arity mismatch");
  check_assignment(n, assignment);
  ForestComb out = unit_comb();
  std::size_t counter = 0;
  for (const auto& t : base.trees()) out = concat(out, compose_tree(t, counter, inputs, assignment));
  return out;
}

ForestComb compose_module(const std::vector<ForestComb>& inputs, const OrderedForest& base) {
  const Flat f = flatten(base.trees());
  std::vector<std::size_t> assignment;
  for (int l : f.label) {
    if (l <= 0) throw std::invalid_argument("base vertices must be labeled 1..n");
    assignment.push_back(static_cast<std::size_t>(l - 1));
  }
  return compose_module(inputs, base, assignment);
}

ForestComb compose_module_all_couplings(const std::vector<ForestComb>& inputs, const OrderedForest& base) {
  const std::size_t n = base.vertex_count();
  if (inputs.size() != n) throw std::invalid_argument("arity mismatch");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ForestComb out;
  do out += compose_module(inputs, base, perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

LiePoly compose_postlie_operad(const std::vector<LiePoly>& inputs, const LiePoly& base) {
  LiePoly out;
  for (const auto& [w, c] : base) out.add(compose_module(inputs, w), c);
  return out;
}

RhoTensor rho_oracle(const OrderedForest& w, std::size_t guard) {
  const std::size_t n = w.vertex_count();
  if (n > guard) throw std::invalid_argument("forest exceeds oracle guard");
  RhoTensor out;
  if (n == 0) {
    out.add({SymLieWord{}, OrderedForest{}}, 1);
    return out;
  }
  const OrderedForest target = label_preorder(w);
  const Flat f = flatten(target.trees());
  for_each_set_partition(n, [&](const std::vector<int>& block, int nb) {
    // Words on each block: orderings of its induced components.
    std::vector<std::vector<OrderedForest>> words(nb);
    for (int b = 0; b < nb; ++b) {
      std::vector<PlanarTree> letters;
      for (std::size_t v = 0; v < n; ++v)
        if (block[v] == b && is_part_root(f, block, static_cast<int>(v)))
          letters.push_back(induced(f, static_cast<int>(v), [&](int c) { return block[c] == b; }));
      std::sort(letters.begin(), letters.end());
      do words[b].emplace_back(letters);
      while (std::next_permutation(letters.begin(), letters.end()));
    }
    std::vector<std::size_t> perm(nb);
    for (const auto& base : forests_of(nb)) {
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<std::size_t> pick(nb, 0);
        for (;;) {
          std::vector<ForestComb> inputs;
          for (int b = 0; b < nb; ++b) inputs.push_back(single(words[b][pick[b]]));
          const Rational c = compose_module(inputs, base, perm).coeff(target);
          if (sgn(c) != 0) {
            std::vector<LiePoly> factors;
            for (int b = 0; b < nb; ++b) factors.push_back(lie_projection(words[b][pick[b]].without_labels()));
            auto [k, word] = SymLieWord::normalize(std::move(factors));
            if (sgn(k) != 0) out.add({word, base}, c * k);
          }
          int b = 0;
          while (b < nb && ++pick[b] == words[b].size()) pick[b++] = 0;
          if (b == nb) break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  });
  return out;
}

LinComb<SymLieWord> lie_projection(const SymWord& w) {
  std::vector<LiePoly> factors;
  for (const auto& part : w.parts()) factors.push_back(lie_projection(part));
  auto [k, word] = SymLieWord::normalize(std::move(factors));
  LinComb<SymLieWord> out;
  out.add(word, k);
  return out;
}

RhoTensor rho_from_delta_W(const OrderedForest& w, PartitionRule rule) {
  RhoTensor out;
  for (const auto& [p, c] : delta_W(w, rule))
    for (const auto& [word, k] : lie_projection(p.first)) out.add({word, p.second}, c * k);
  return out;
}

Rational evaluate(const CharacterMap& a, const SymLieWord& w) {
  Rational out = 1;
  for (const auto& f : w.factors()) out *= a(f);
  return out;
}

CharacterMap star_W(const CharacterMap& alpha, const CharacterMap& beta, PartitionRule rule) {
  if (!is_logarithmic(alpha)) throw std::invalid_argument("left factor must be logarithmic");
  const std::size_t order = std::min(alpha.order(), beta.order());
  CharacterMap out(order, beta.empty_value());
  for (std::size_t n = 1; n <= order; ++n)
    for (const auto& w : forests_of(n)) {
      Rational s = 0;
      for (const auto& [p, c] : delta_W(w, rule)) {
        Rational term = c * beta(p.second);
        for (const auto& part : p.first.parts()) {
          if (sgn(term) == 0) break;
          term *= alpha(part);
        }
        s += term;
      }
      out.set(w, s);
    }
  return out;
}

CharacterMap star_rho(const CharacterMap& alpha, const CharacterMap& beta, std::size_t guard) {
  const std::size_t order = std::min(alpha.order(), beta.order());
  if (order > guard) throw std::invalid_argument("order exceeds oracle guard");
  CharacterMap out(order, beta.empty_value());
  for (std::size_t n = 1; n <= order; ++n)
    for (const auto& w : forests_of(n)) {
      Rational s = 0;
      for (const auto& [p, c] : rho_oracle(w, guard)) s += c * evaluate(alpha, p.first) * beta(p.second);
      out.set(w, s);
    }
  return out;
}

CharacterMap logarithmic_from(const CharacterMap& r) {
  CharacterMap out(r.order());
  for (std::size_t n = 1; n <= r.order(); ++n)
    for (const auto& w : forests_of(n)) out.set(w, r(lie_projection(w)));
  return out;
}

CharacterMap exponential_from(const CharacterMap& alpha) {
  CharacterMap out(alpha.order(), 1);
  for (std::size_t n = 1; n <= alpha.order(); ++n)
    for (const auto& w : forests_of(n)) {
      // Σ_k 1/k! Σ over splittings of w into k non-empty consecutive words.
      const auto& t = w.trees();
      const std::size_t m = t.size();
      std::vector<Rational> value(m + 1);
      std::vector<std::vector<Rational>> by_k(m + 1, std::vector<Rational>(m + 1, 0));
      by_k[0][0] = 1;
      for (std::size_t end = 1; end <= m; ++end)
        for (std::size_t start = 0; start < end; ++start) {
          const Rational a =
              alpha(OrderedForest(std::vector<PlanarTree>(t.begin() + start, t.begin() + end)));
          if (sgn(a) == 0) continue;
          for (std::size_t k = 1; k <= end; ++k) by_k[k][end] += by_k[k - 1][start] * a;
        }
      Rational s = 0, fact = 1;
      for (std::size_t k = 1; k <= m; ++k) {
        fact *= k;
        s += by_k[k][m] / fact;
      }
      out.set(w, s);
    }
  return out;
}

CharacterMap random_character(std::size_t order, std::mt19937& rng, std::size_t support, const Rational& empty) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  CharacterMap out(order, empty);
  for (std::size_t n = 1; n <= std::min(order, support); ++n)
    for (const auto& w : forests_of(n)) out.set(w, Rational(num(rng), den(rng)));
  return out;
}

Report check_cointeraction(std::size_t order, std::size_t char_order, unsigned seed) {
  Report rep;
  std::map<OrderedForest, RhoTensor> rho;
  auto get = [&](const OrderedForest& w) -> const RhoTensor& {
    auto it = rho.find(w);
    if (it == rho.end()) it = rho.emplace(w, rho_oracle(w, std::max<std::size_t>(order, 4))).first;
    return it->second;
  };
  RhoTensor unit;
  unit.add({SymLieWord{}, OrderedForest{}}, 1);
  if (!(get(OrderedForest{}) == unit)) rep.fail("rho(empty) != 1 ⊗ empty");

  auto times = [](const RhoTensor& x, const RhoTensor& y) {
    RhoTensor out;
    for (const auto& [p, a] : x)
      for (const auto& [q, b] : y)
        for (const auto& [r, c] : shuffle(p.second, q.second)) out.add({lie_product(p.first, q.first), r}, a * b * c);
    return out;
  };
  for (std::size_t n1 = 1; n1 < order; ++n1)
    for (std::size_t n2 = 1; n1 + n2 <= order; ++n2)
      for (const auto& a : forests_of(n1))
        for (const auto& b : forests_of(n2)) {
          RhoTensor lhs;
          for (const auto& [w, c] : shuffle(a, b)) lhs.add(get(w), c);
          if (!(lhs == times(get(a), get(b))))
            rep.fail("rho not multiplicative on " + to_string(a) + " ⧢ " + to_string(b));
        }

  using T3 = Tensor3<SymLieWord, OrderedForest, OrderedForest>;
  for (std::size_t n = 1; n <= order; ++n)
    for (const auto& w : forests_of(n)) {
      for (const auto& [p, c] : get(w))
        if (p.second.empty()) rep.fail("(Id⊗ε)rho non-zero on " + to_string(w));
      T3 lhs, rhs;
      for (const auto& [p, c] : get(w))
        for (const auto& [q, d] : delta_N(p.second)) lhs.add({p.first, q.first, q.second}, c * d);
      for (const auto& [q, d] : delta_N(w))
        for (const auto& [x, a] : get(q.first))
          for (const auto& [y, b] : get(q.second))
            rhs.add({lie_product(x.first, y.first), x.second, y.second}, d * a * b);
      if (!(lhs == rhs)) rep.fail("(Id⊗Δ_N)rho != m13(rho⊗rho)Δ_N on " + to_string(w));
    }

  std::mt19937 rng(seed);
  const CharacterMap alpha = logarithmic_from(random_character(char_order, rng, char_order));
  const CharacterMap a = random_character(char_order, rng, char_order, 1);
  const CharacterMap b = random_character(char_order, rng, char_order, 1);
  const CharacterMap lhs = star_W(alpha, convolve_N(a, b));
  const CharacterMap rhs = convolve_N(star_W(alpha, a), star_W(alpha, b));
  for (std::size_t n = 0; n <= char_order; ++n)
    for (const auto& w : forests_of(n))
      if (lhs(w) != rhs(w)) rep.fail("character identity fails on " + to_string(w));
  return rep;
}

namespace {

template <class K, class Leg>
Report cointeraction_with(std::size_t order, PartitionRule rule, Leg&& leg) {
  Report rep;
  using T3 = Tensor3<K, OrderedForest, OrderedForest>;
  for (std::size_t n = 1; n <= order; ++n)
    for (const auto& w : forests_of(n)) {
      T3 lhs, rhs;
      for (const auto& [p, c] : delta_W(w, rule))
        for (const auto& [k, e] : leg(p.first))
          for (const auto& [q, d] : delta_N(p.second)) lhs.add({k, q.first, q.second}, c * d * e);
      for (const auto& [q, d] : delta_N(w))
        for (const auto& [x, a] : delta_W(q.first, rule))
          for (const auto& [y, b] : delta_W(q.second, rule))
            for (const auto& [k, e] : leg(x.first * y.first)) rhs.add({k, x.second, y.second}, d * a * b * e);
      if (!(lhs == rhs)) rep.fail("cointeraction fails on " + to_string(w));
    }
  return rep;
}

template <class K, class Leg>
Report coassociativity_with(std::size_t order, PartitionRule rule, Leg&& leg) {
  Report rep;
  using T3 = Tensor3<K, K, OrderedForest>;
  for (std::size_t n = 0; n <= order; ++n)
    for (const auto& w : forests_of(n)) {
      const auto d = delta_W(w, rule);
      T3 lhs, rhs;
      for (const auto& [p, c] : d) {
        for (const auto& [q, e] : delta_W(p.first, rule))
          for (const auto& [a, x] : leg(q.first))
            for (const auto& [b, y] : leg(q.second)) lhs.add({a, b, p.second}, c * e * x * y);
        for (const auto& [a, x] : leg(p.first))
          for (const auto& [q, e] : delta_W(p.second, rule))
            for (const auto& [b, y] : leg(SymWord(q.first))) rhs.add({a, b, q.second}, c * e * x * y);
      }
      if (!(lhs == rhs)) rep.fail("coassociativity fails on " + to_string(w));
      ForestComb right;
      LinComb<K> counit_right;
      for (const auto& [p, c] : d) {
        if (counit_W(p.first) != 0) right.add(p.second, c);
        if (p.second.vertex_count() == 1 || (p.second.empty() && w.empty())) counit_right.add(leg(p.first), c);
      }
      if (!(right == ForestComb(w))) rep.fail("left counit fails on " + to_string(w));
      if (!(counit_right == leg(w.empty() ? SymWord{} : SymWord(w))))
        rep.fail("right counit fails on " + to_string(w));
    }
  return rep;
}

}  // namespace

Report check_delta_W_cointeraction(std::size_t order, PartitionRule rule, bool lie_projected) {
  if (lie_projected)
    return cointeraction_with<SymLieWord>(order, rule, [](const SymWord& s) { return lie_projection(s); });
  return cointeraction_with<SymWord>(order, rule, [](const SymWord& s) { return LinComb<SymWord>(s); });
}

Report check_delta_W_coassociativity(std::size_t order, PartitionRule rule, bool lie_projected) {
  if (lie_projected)
    return coassociativity_with<SymLieWord>(order, rule, [](const SymWord& s) { return lie_projection(s); });
  return coassociativity_with<SymWord>(order, rule, [](const SymWord& s) { return LinComb<SymWord>(s); });
}

bool check_grading(std::size_t order, PartitionRule rule) {
  for (std::size_t n = 1; n <= order; ++n)
    for (const auto& w : forests_of(n))
      for (const auto& [p, c] : delta_W(w, rule)) {
        long g = static_cast<long>(p.second.vertex_count()) - 1;
        for (const auto& part : p.first.parts()) g += static_cast<long>(part.vertex_count()) - 1;
        if (g != static_cast<long>(n) - 1) return false;
      }
  return true;
}

Tensor2<Forest, Forest> pi_image(const PlanarTree& t) {
  Tensor2<Forest, Forest> out;
  for (const auto& [p, c] : delta_W(OrderedForest(t))) {
    std::vector<PlanarTree> trees;
    bool only_trees = true;
    for (const auto& part : p.first.parts()) {
      if (part.size() != 1) only_trees = false;
      trees.push_back(part[0]);
    }
    if (only_trees) out.add({forget_planarity(OrderedForest(trees)), forget_planarity(p.second)}, c);
  }
  return out;
}

bool check_pi_morphism(const PlanarTree& t) {
  return pi_image(t) == delta_H(forget_planarity(OrderedForest(t.without_labels())));
}

}  // namespace lbs
