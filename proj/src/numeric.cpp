#include "lbs/numeric.hpp"

#include <map>
#include <stdexcept>

#include <json.hpp>

#include "lbs/prelie.hpp"

namespace lbs {

using nlohmann::json;

namespace {

std::size_t var_count(const Poly& p) { return p.is_zero() ? 0 : p.begin()->first.size(); }

Poly shift_h_down(const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p) {
    if (m.back() == 0) throw std::invalid_argument("field has a term without a factor of h");
    Monomial n = m;
    --n.back();
    out.add(n, c);
  }
  return out;
}

PolyVectorField truncate_h(const PolyVectorField& f, std::size_t max_power) {
  PolyVectorField out(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) out[i] = truncate_h(f[i], max_power);
  return out;
}

Rational tree_value(const ForestCharacter& a, const NonPlanarTree& t) { return a(Forest(t)); }

ForestCharacter restrict_to(const ForestCharacter& a, std::size_t n) {
  if (a.order() < n) throw std::invalid_argument("character order below the requested truncation");
  ForestCharacter out(n);
  for (const auto& [f, c] : a.values())
    if (f.vertex_count() <= n) out.set(f, c);
  return out;
}

class Differentials {
 public:
  explicit Differentials(const PolyVectorField& f) : f_(f) {}

  const PolyVectorField& operator()(const NonPlanarTree& t) {
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
    std::vector<PolyVectorField> args;
    for (const auto& c : t.planar().children()) args.push_back((*this)(canonicalize(c)));
    PolyVectorField out(f_.dim());
    for (std::size_t i = 0; i < f_.dim(); ++i) out[i] = applied(f_[i], args, 0);
    return memo_.emplace(t, std::move(out)).first->second;
  }

 private:
  // Σ_j ∂_j p · args[k]_j, then the remaining arguments.
  Poly applied(const Poly& p, const std::vector<PolyVectorField>& args, std::size_t k) const {
    if (k == args.size()) return p;
    Poly out;
    for (std::size_t j = 0; j < f_.dim(); ++j) {
      Poly d = derivative(p, j);
      if (d.is_zero()) continue;
      out += multiply(applied(d, args, k + 1), args[k][j]);
    }
    return out;
  }

  const PolyVectorField& f_;
  std::map<NonPlanarTree, PolyVectorField> memo_;
};

Rational parse_coeff(const json& c) {
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) return Rational(c.get<long>());
  throw std::invalid_argument("coefficient must be a string or an integer");
}

}  // namespace

PolyVectorField::PolyVectorField(std::size_t dim) : dim_(dim), comps_(dim) {}

PolyVectorField::PolyVectorField(std::size_t dim, std::vector<Poly> components)
    : dim_(dim), comps_(std::move(components)) {
  if (comps_.size() != dim_) throw std::invalid_argument("component count differs from the dimension");
  for (const auto& p : comps_)
    for (const auto& [m, c] : p)
      if (m.size() != dim_ + 1) throw std::invalid_argument("monomial has the wrong number of variables");
}

PolyVectorField& PolyVectorField::add(const PolyVectorField& o, const Rational& scale) {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < dim_; ++i) comps_[i].add(o.comps_[i], scale);
  return *this;
}

Poly monomial(std::size_t dim, const Rational& c, std::vector<unsigned> powers, unsigned hpower) {
  if (powers.size() != dim) throw std::invalid_argument("monomial has the wrong number of variables");
  powers.push_back(hpower);
  return Poly(powers, c);
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [m, c] : a)
    for (const auto& [n, d] : b) {
      if (m.size() != n.size()) throw std::invalid_argument("dimension mismatch");
      Monomial r = m;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] += n[i];
      out.add(r, c * d);
    }
  return out;
}

Poly derivative(const Poly& p, std::size_t var) {
  Poly out;
  for (const auto& [m, c] : p) {
    if (var + 1 >= m.size()) throw std::out_of_range("no such variable");
    if (m[var] == 0) continue;
    Monomial n = m;
    --n[var];
    out.add(n, c * m[var]);
  }
  return out;
}

Poly truncate_h(const Poly& p, std::size_t max_power) {
  Poly out;
  for (const auto& [m, c] : p)
    if (m.back() <= max_power) out.add(m, c);
  return out;
}

std::vector<Rational> evaluate_at(const Poly& p, const std::vector<Rational>& y0, std::size_t max_power) {
  std::vector<Rational> out(max_power + 1, 0);
  if (var_count(p) != 0 && var_count(p) != y0.size() + 1) throw std::invalid_argument("dimension mismatch");
  for (const auto& [m, c] : p) {
    if (m.back() > max_power) continue;
    Rational v = c;
    for (std::size_t i = 0; i < y0.size(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) v *= y0[i];
    out[m.back()] += v;
  }
  for (auto& q : out) q.canonicalize();
  return out;
}

PolyVectorField identity_field(std::size_t dim) {
  PolyVectorField out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<unsigned> powers(dim, 0);
    powers[i] = 1;
    out[i] = monomial(dim, 1, powers);
  }
  return out;
}

PolyVectorField directional_derivative(const PolyVectorField& p, const PolyVectorField& g) {
  if (p.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
  PolyVectorField out(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) out[i] += multiply(derivative(p[i], j), g[j]);
  return out;
}

PolyVectorField elementary_differential(const PolyVectorField& f, const NonPlanarTree& t) {
  Differentials d(f);
  return d(t);
}

PolyVectorField bseries(const PolyVectorField& f, const ForestCharacter& alpha, std::size_t n) {
  if (alpha.order() < n) throw std::invalid_argument("character order below the requested truncation");
  PolyVectorField out = identity_field(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) out[i] *= alpha.empty_value();
  Differentials d(f);
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto& t : enumerate_nonplanar_trees(k)) {
      Rational c = tree_value(alpha, t) / Rational(static_cast<unsigned long>(symmetry_factor(t)));
      if (sgn(c) == 0) continue;
      const PolyVectorField& ft = d(t);
      for (std::size_t i = 0; i < f.dim(); ++i)
        out[i] += c * multiply(ft[i], monomial(f.dim(), 1, std::vector<unsigned>(f.dim(), 0), k));
    }
  return truncate_h(out, n);
}

std::vector<std::vector<Rational>> bseries_eval(const PolyVectorField& f, const ForestCharacter& alpha,
                                                const std::vector<Rational>& y0, std::size_t n) {
  if (y0.size() != f.dim()) throw std::invalid_argument("point dimension differs from the field");
  PolyVectorField b = bseries(f, alpha, n);
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < f.dim(); ++i) out.push_back(evaluate_at(b[i], y0, n));
  return out;
}

std::vector<Rational> bseries_eval(const Rational& h, const PolyVectorField& f, const ForestCharacter& alpha,
                                   const std::vector<Rational>& y0, std::size_t n) {
  std::vector<Rational> out;
  for (const auto& coeffs : bseries_eval(f, alpha, y0, n)) {
    Rational s = 0, hk = 1;
    for (const auto& c : coeffs) {
      s += c * hk;
      hk *= h;
    }
    s.canonicalize();
    out.push_back(s);
  }
  return out;
}

ForestCharacter exact_flow_character(std::size_t order) {
  ForestCharacter out(order, 1);
  for (std::size_t k = 1; k <= order; ++k)
    for (const auto& t : enumerate_nonplanar_trees(k))
      out.set(Forest(t), Rational(1ul, static_cast<unsigned long>(tree_factorial(t.planar()))));
  return out;
}

bool verify_bseries_substitution(const ForestCharacter& alpha, const ForestCharacter& beta,
                                 const PolyVectorField& f, const std::vector<Rational>& y0, std::size_t n) {
  if (sgn(alpha.empty_value()) != 0) throw std::invalid_argument("substituted character must vanish on ∅");
  const ForestCharacter a = restrict_to(alpha, n);
  const ForestCharacter b = restrict_to(beta, n);
  PolyVectorField g(f.dim());
  const PolyVectorField ba = bseries(f, a, n);
  for (std::size_t i = 0; i < f.dim(); ++i) g[i] = shift_h_down(ba[i]);
  return bseries_eval(g, b, y0, n) == bseries_eval(f, convolve(a, b, ForestCoproduct::H), y0, n);
}

bool check_elementary_differential_morphism(const PolyVectorField& f, std::size_t order) {
  Differentials d(f);
  for (std::size_t n1 = 1; n1 <= order; ++n1)
    for (const auto& t1 : enumerate_nonplanar_trees(n1))
      for (std::size_t n2 = 1; n2 <= order; ++n2)
        for (const auto& t2 : enumerate_nonplanar_trees(n2)) {
          PolyVectorField lhs(f.dim());
          for (const auto& [t, c] : graft(t1, t2)) lhs.add(d(t), c);
          if (lhs != directional_derivative(d(t2), d(t1))) return false;
        }
  return true;
}

PolyVectorField field_from_json(std::string_view text) try {
  json j = json::parse(text);
  const std::size_t dim = j.at("dim").get<std::size_t>();
  const json& comps = j.at("components");
  if (!comps.is_array() || comps.size() != dim) throw std::invalid_argument("component count differs from dim");
  std::vector<Poly> out;
  for (const auto& comp : comps) {
    Poly p;
    for (const auto& m : comp.at("monomials")) {
      auto powers = m.at("powers").get<std::vector<unsigned>>();
      unsigned hp = m.contains("hpower") ? m.at("hpower").get<unsigned>() : 0;
      p += monomial(dim, parse_coeff(m.at("coeff")), powers, hp);
    }
    out.push_back(std::move(p));
  }
  return PolyVectorField(dim, std::move(out));
} catch (const json::exception& e) {
  throw std::invalid_argument(std::string("malformed vector field JSON: ") + e.what());
}

std::string field_to_json(const PolyVectorField& f) {
  json comps = json::array();
  for (const auto& p : f.components()) {
    json ms = json::array();
    for (const auto& [m, c] : p)
      ms.push_back({{"coeff", c.get_str()},
                    {"powers", std::vector<unsigned>(m.begin(), m.end() - 1)},
                    {"hpower", m.back()}});
    comps.push_back({{"monomials", ms}});
  }
  return json{{"dim", f.dim()}, {"components", comps}}.dump();
}

std::string to_string(const Poly& p, std::size_t dim) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < dim ? "y" + std::to_string(i + 1) : std::string("h");
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    Rational a = abs(c);
    std::string coeff = a == 1 && !mono.empty() ? "" : a.get_str();
    std::string term = coeff.empty() ? mono : (mono.empty() ? coeff : coeff + "*" + mono);
    if (out.empty())
      out = (sgn(c) < 0 ? "-" : "") + term;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace lbs
