#ifndef LGM_IDEAL_HPP
#define LGM_IDEAL_HPP

#include <algorithm>
#include <list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgm/polynomial.hpp"

namespace lgm {

template <class K>
struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Polynomial<K>> elements;  // reduced: monic, interreduced, lead-ascending
};

struct GroebnerOptions {
  /// Abort threshold on processed S-pairs; degenerate inputs fail loudly
  /// instead of spinning.
  size_t max_pairs = 200000;
};

/// Full normal form: every term of the remainder is reducible by no lead.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p,
                          const std::vector<Polynomial<K>>& basis,
                          const MonomialOrder& order) {
  struct Row {
    const Polynomial<K>* g;
    const Term<K>* lt;
  };
  std::vector<Row> rows;
  for (const auto& g : basis)
    if (!g.is_zero_poly()) rows.push_back({&g, g.leading_term(order)});

  Polynomial<K> rem = Polynomial<K>::zero(p.registry());
  Polynomial<K> h = p;
  while (!h.is_zero_poly()) {
    const Term<K>* t = h.leading_term(order);
    const Row* hit = nullptr;
    for (const auto& r : rows)
      if (r.lt->mono.divides(t->mono)) {
        hit = &r;
        break;
      }
    if (hit) {
      Monomial q = hit->lt->mono.divide_into(t->mono);
      h -= hit->g->times_term(q, t->coeff / hit->lt->coeff);
    } else {
      Polynomial<K> single = Polynomial<K>::monomial(p.registry(), t->mono, t->coeff);
      rem += single;
      h -= single;
    }
  }
  return rem;
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const GroebnerBasis<K>& gb) {
  return normal_form(p, gb.elements, gb.order);
}

template <class K>
bool in_ideal(const Polynomial<K>& p, const GroebnerBasis<K>& gb) {
  return normal_form(p, gb).is_zero_poly();
}

namespace detail {

template <class K>
Polynomial<K> spoly(const Polynomial<K>& f, const Polynomial<K>& g,
                    const MonomialOrder& order) {
  const Term<K>* lf = f.leading_term(order);
  const Term<K>* lg = g.leading_term(order);
  Monomial l = Monomial::lcm(lf->mono, lg->mono);
  K one = lf->coeff / lf->coeff;
  return f.times_term(lf->mono.divide_into(l), one / lf->coeff) -
         g.times_term(lg->mono.divide_into(l), one / lg->coeff);
}

struct Pair {
  size_t i, j;
  Monomial lcm;
  uint64_t sugar;
};

}  // namespace detail

/// Buchberger's algorithm with the sugar selection strategy and
/// Gebauer-Moeller pair elimination. Returns the unique reduced basis:
/// monic elements, no term divisible by another element's lead, sorted by
/// ascending lead.
template <class K>
GroebnerBasis<K> groebner(std::vector<Polynomial<K>> gens, MonomialOrder order,
                          GroebnerOptions opts = {}) {
  GroebnerBasis<K> out{order, {}};

  std::vector<Polynomial<K>> g;
  std::vector<uint64_t> sugar;
  std::vector<detail::Pair> pairs;

  auto lead = [&](size_t i) -> const Term<K>& { return *g[i].leading_term(order); };

  auto add_element = [&](Polynomial<K> h, uint64_t hsugar) {
    size_t t = g.size();
    Monomial lt = h.leading_term(order)->mono;

    // Gebauer-Moeller update of the pending pair set
    std::vector<detail::Pair> fresh;
    for (size_t i = 0; i < t; ++i) {
      Monomial l = Monomial::lcm(lead(i).mono, lt);
      uint64_t s = std::max(sugar[i] + l.degree() - lead(i).mono.degree(),
                            hsugar + l.degree() - lt.degree());
      fresh.push_back({i, t, std::move(l), s});
    }
    // drop new pairs whose lcm is a proper multiple of another new pair's lcm
    std::vector<bool> keep(fresh.size(), true);
    for (size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      for (size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[a]) continue;
        if (!keep[b]) continue;
        if (fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm))
          keep[a] = false;
      }
    }
    // among equal lcms keep one representative, preferring a coprime pair
    // (which the product criterion then discards entirely)
    for (size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      for (size_t b = a + 1; b < fresh.size(); ++b) {
        if (!keep[b] || fresh[b].lcm != fresh[a].lcm) continue;
        bool b_coprime = lead(fresh[b].i).mono.coprime_with(lt);
        if (b_coprime)
          keep[a] = false;
        else
          keep[b] = false;
      }
    }
    // product criterion
    for (size_t a = 0; a < fresh.size(); ++a)
      if (keep[a] && lead(fresh[a].i).mono.coprime_with(lt)) keep[a] = false;
    // chain criterion against the surviving old pairs
    std::vector<detail::Pair> kept_old;
    for (auto& pr : pairs) {
      bool drop = lt.divides(pr.lcm) &&
                  Monomial::lcm(lead(pr.i).mono, lt) != pr.lcm &&
                  Monomial::lcm(lead(pr.j).mono, lt) != pr.lcm;
      if (!drop) kept_old.push_back(std::move(pr));
    }
    pairs = std::move(kept_old);
    for (size_t a = 0; a < fresh.size(); ++a)
      if (keep[a]) pairs.push_back(std::move(fresh[a]));

    g.push_back(std::move(h));
    sugar.push_back(hsugar);
  };

  for (auto& p : gens) {
    if (p.is_zero_poly()) continue;
    const Term<K>* lt = p.leading_term(order);
    Polynomial<K> monic = p.times_scalar(lt->coeff / (lt->coeff * lt->coeff));
    add_element(std::move(monic), static_cast<uint64_t>(p.total_degree()));
  }

  size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > opts.max_pairs)
      throw std::runtime_error("groebner: pair ceiling exceeded (" +
                               std::to_string(opts.max_pairs) + " pairs)");
    // sugar strategy: minimal (sugar, lcm, i, j)
    size_t best = 0;
    for (size_t a = 1; a < pairs.size(); ++a) {
      const auto& x = pairs[a];
      const auto& y = pairs[best];
      int c = x.sugar < y.sugar ? -1 : x.sugar > y.sugar ? 1 : order.cmp(x.lcm, y.lcm);
      if (c < 0 || (c == 0 && (x.i < y.i || (x.i == y.i && x.j < y.j)))) best = a;
    }
    detail::Pair pr = std::move(pairs[best]);
    pairs.erase(pairs.begin() + best);

    Polynomial<K> s = detail::spoly(g[pr.i], g[pr.j], order);
    Polynomial<K> h = normal_form(s, g, order);
    if (h.is_zero_poly()) continue;
    const Term<K>* lt = h.leading_term(order);
    add_element(h.times_scalar(lt->coeff / (lt->coeff * lt->coeff)), pr.sugar);
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<bool> minimal(g.size(), true);
  for (size_t a = 0; a < g.size(); ++a)
    for (size_t b = 0; b < g.size() && minimal[a]; ++b) {
      if (a == b || !minimal[b]) continue;
      const Monomial& la = g[a].leading_term(order)->mono;
      const Monomial& lb = g[b].leading_term(order)->mono;
      if (lb.divides(la) && !(la == lb && b > a)) minimal[a] = false;
    }
  std::vector<Polynomial<K>> min_basis;
  for (size_t a = 0; a < g.size(); ++a)
    if (minimal[a]) min_basis.push_back(std::move(g[a]));

  // tail-reduce to the unique reduced basis
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t a = 0; a < min_basis.size(); ++a) {
      std::vector<Polynomial<K>> others;
      for (size_t b = 0; b < min_basis.size(); ++b)
        if (b != a) others.push_back(min_basis[b]);
      Polynomial<K> r = normal_form(min_basis[a], others, order);
      if (r != min_basis[a]) {
        min_basis[a] = std::move(r);
        changed = true;
      }
    }
    min_basis.erase(std::remove_if(min_basis.begin(), min_basis.end(),
                                   [](const auto& q) { return q.is_zero_poly(); }),
                    min_basis.end());
  }

  std::sort(min_basis.begin(), min_basis.end(), [&](const auto& a, const auto& b) {
    return order.less(a.leading_term(order)->mono, b.leading_term(order)->mono);
  });
  out.elements = std::move(min_basis);
  return out;
}

/// Generator list over a fixed registry with Groebner caches per order.
template <class K>
class IdealBasis {
 public:
  IdealBasis() = default;
  IdealBasis(RegistryPtr reg, std::vector<Polynomial<K>> gens)
      : reg_(std::move(reg)), gens_(std::move(gens)) {
    for (const auto& p : gens_) require_same_registry(p.registry(), reg_);
  }

  const RegistryPtr& registry() const { return reg_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }
  bool is_zero_ideal() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const auto& p) { return p.is_zero_poly(); });
  }

  const GroebnerBasis<K>& groebner_basis(MonomialOrder order = MonomialOrder::grevlex(),
                                         GroebnerOptions opts = {}) const {
    auto key = order.name();
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, lgm::groebner(gens_, order, opts)).first;
    return it->second;
  }

  Polynomial<K> reduce(const Polynomial<K>& p) const {
    return normal_form(p, groebner_basis());
  }
  bool contains(const Polynomial<K>& p) const { return reduce(p).is_zero_poly(); }

 private:
  RegistryPtr reg_;
  std::vector<Polynomial<K>> gens_;
  mutable std::map<std::string, GroebnerBasis<K>> cache_;
};

/// Quotient with a zero remainder requirement; division is by the single
/// polynomial f under `order`.
template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& p, const Polynomial<K>& f,
                           const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (f.is_zero_poly()) throw std::invalid_argument("divide_exact: zero divisor");
  const Term<K>* lf = f.leading_term(order);
  Polynomial<K> q = Polynomial<K>::zero(p.registry());
  Polynomial<K> h = p;
  while (!h.is_zero_poly()) {
    const Term<K>* t = h.leading_term(order);
    if (!lf->mono.divides(t->mono))
      throw std::domain_error("divide_exact: division is not exact");
    Monomial m = lf->mono.divide_into(t->mono);
    K c = t->coeff / lf->coeff;
    q += Polynomial<K>::monomial(p.registry(), m, c);
    h -= f.times_term(m, c);
  }
  return q;
}

/// (I : f) via elimination: I ∩ (f) is computed by eliminating a fresh
/// variable t from t·I + (1-t)·(f), and each intersection generator is then
/// divided exactly by f. Each returned generator g is verified to satisfy
/// g·f ∈ I.
template <class K>
IdealBasis<K> ideal_quotient(const IdealBasis<K>& ideal, const Polynomial<K>& f,
                             GroebnerOptions opts = {}) {
  const RegistryPtr& reg = ideal.registry();
  require_same_registry(f.registry(), reg);
  if (f.is_zero_poly()) throw std::invalid_argument("ideal_quotient: zero divisor");
  if (ideal.is_zero_ideal()) return IdealBasis<K>(reg, {});

  std::string tname = "_q";
  while (reg->has(tname)) tname += "_";
  RegistryPtr ext = reg->extended({tname});
  size_t ti = ext->size() - 1;

  const Term<K>* anyt = f.leading_term(MonomialOrder::grevlex());
  K one = anyt->coeff / anyt->coeff;
  Polynomial<K> t = Polynomial<K>::variable(ext, ti, one);
  Polynomial<K> one_minus_t = Polynomial<K>::constant(ext, one) - t;

  std::vector<Polynomial<K>> work;
  for (const auto& gen : ideal.generators()) {
    if (gen.is_zero_poly()) continue;
    work.push_back(t * transport(gen, ext));
  }
  work.push_back(one_minus_t * transport(f, ext));

  MonomialOrder elim = MonomialOrder::elimination(reg->size());
  GroebnerBasis<K> gb = groebner(std::move(work), elim, opts);

  std::vector<Polynomial<K>> quot;
  for (const auto& e : gb.elements) {
    if (e.leading_term(elim)->mono[ti] != 0) continue;  // still involves t
    Polynomial<K> back = transport(e, reg);
    quot.push_back(divide_exact(back, f));
  }

  GroebnerBasis<K> canon = groebner(std::move(quot), MonomialOrder::grevlex(), opts);
  IdealBasis<K> result(reg, canon.elements);

  for (const auto& q : result.generators())
    if (!ideal.contains(q * f))
      throw std::logic_error("ideal_quotient: verification q*f in I failed");
  return result;
}

/// P together with its partials in the listed variables.
template <class K>
IdealBasis<K> jacobian_ideal(const Polynomial<K>& p,
                             const std::vector<std::string>& vars) {
  std::vector<Polynomial<K>> gens{p};
  for (const auto& v : vars)
    gens.push_back(p.derivative(p.registry()->index_checked(v)));
  return IdealBasis<K>(p.registry(), std::move(gens));
}

/// Every polynomial reduces to zero modulo the component's ideal.
template <class K>
bool vanishes_on_component(const std::vector<Polynomial<K>>& polys,
                           const IdealBasis<K>& component) {
  return std::all_of(polys.begin(), polys.end(),
                     [&](const auto& p) { return component.contains(p); });
}

}  // namespace lgm

#endif
