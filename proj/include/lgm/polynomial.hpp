#ifndef LGM_POLYNOMIAL_HPP
#define LGM_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgm/fields.hpp"
#include "lgm/monomial.hpp"
#include "lgm/order.hpp"
#include "lgm/registry.hpp"

namespace lgm {

template <class K>
struct Term {
  Monomial mono;
  K coeff;
};

/// Sparse multivariate polynomial over a fixed registry.
///
/// Terms are kept strictly descending in grevlex with no zero coefficients;
/// that normal form makes structural equality and printing canonical.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(RegistryPtr reg) : reg_(std::move(reg)) { require_reg(); }

  static Polynomial zero(RegistryPtr reg) { return Polynomial(std::move(reg)); }

  static Polynomial constant(RegistryPtr reg, K c) {
    Polynomial p(std::move(reg));
    if (!is_zero(c)) p.terms_.push_back({Monomial(p.reg_->size()), std::move(c)});
    return p;
  }

  static Polynomial variable(RegistryPtr reg, size_t i, K c) {
    Polynomial p(std::move(reg));
    if (i >= p.reg_->size()) throw std::out_of_range("variable index");
    if (!is_zero(c)) p.terms_.push_back({Monomial::var(p.reg_->size(), i), std::move(c)});
    return p;
  }

  static Polynomial monomial(RegistryPtr reg, Monomial m, K c) {
    Polynomial p(std::move(reg));
    if (m.nvars() != p.reg_->size())
      throw std::invalid_argument("monomial length does not match registry");
    if (!is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  static Polynomial from_terms(RegistryPtr reg, std::vector<Term<K>> terms) {
    Polynomial p(std::move(reg));
    std::map<Monomial, K, OrderGreater> acc;
    for (auto& t : terms) {
      if (t.mono.nvars() != p.reg_->size())
        throw std::invalid_argument("term length does not match registry");
      auto [it, fresh] = acc.try_emplace(std::move(t.mono), t.coeff);
      if (!fresh) it->second += t.coeff;
    }
    for (auto& [m, c] : acc)
      if (!is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  const RegistryPtr& registry() const { return reg_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  int64_t total_degree() const {
    int64_t d = -1;
    for (const auto& t : terms_)
      d = std::max(d, static_cast<int64_t>(t.mono.degree()));
    return d;
  }

  K coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return K{};
  }

  /// Largest term under `order`; nullptr for zero.
  const Term<K>* leading_term(const MonomialOrder& order) const {
    const Term<K>* best = nullptr;
    for (const auto& t : terms_)
      if (!best || order.greater(t.mono, best->mono)) best = &t;
    return best;
  }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.reg_);
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_registry(a.reg_, b.reg_);
    MonomialOrder ord = MonomialOrder::grevlex();
    Polynomial r(a.reg_);
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = ord.cmp(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        K s = a.terms_[i].coeff + b.terms_[j].coeff;
        if (!is_zero(s)) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
        ++i, ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_registry(a.reg_, b.reg_);
    std::map<Monomial, K, OrderGreater> acc;
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        Monomial m = ta.mono * tb.mono;
        K c = ta.coeff * tb.coeff;
        auto [it, fresh] = acc.try_emplace(std::move(m), c);
        if (!fresh) it->second += c;
      }
    Polynomial r(a.reg_);
    for (auto& [m, c] : acc)
      if (!is_zero(c)) r.terms_.push_back({m, c});
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// this * c m, a single-term product (reduction steps).
  Polynomial times_term(const Monomial& m, const K& c) const {
    Polynomial r(reg_);
    if (is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;  // multiplying by a fixed monomial preserves the term order
  }

  Polynomial times_scalar(const K& c) const {
    Polynomial r(reg_);
    if (is_zero(c)) return r;
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
  }

  Polynomial pow(uint32_t e) const {
    if (e == 0) {
      K one = leading_coeff_or_default();
      return constant(reg_, one);
    }
    Polynomial base = *this, acc = *this;
    for (uint32_t k = 1; k < e; ++k) acc *= base;
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_registry(a.reg_, b.reg_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial derivative(size_t var) const {
    if (!reg_ || var >= reg_->size()) throw std::out_of_range("derivative variable");
    Polynomial r(reg_);
    for (const auto& t : terms_) {
      uint32_t e = t.mono[var];
      if (e == 0) continue;
      Monomial m = t.mono;
      m[var] = e - 1;
      K c = scale_nat(t.coeff, e);
      if (!is_zero(c)) r.terms_.push_back({std::move(m), std::move(c)});
    }
    return r;  // lowering one exponent preserves relative grevlex order
  }

  /// Full evaluation. Every variable occurring in the polynomial must be
  /// assigned; unused variables may be omitted.
  K evaluate(const std::map<std::string, K>& point) const {
    std::vector<std::optional<K>> v(reg_->size());
    for (const auto& [name, val] : point) {
      auto i = reg_->index(name);
      if (!i) throw std::invalid_argument("evaluate: unknown variable '" + name + "'");
      v[*i] = val;
    }
    K sum{};
    for (const auto& t : terms_) {
      K prod = t.coeff;
      for (size_t i = 0; i < reg_->size(); ++i) {
        uint32_t e = t.mono[i];
        if (e == 0) continue;
        if (!v[i])
          throw std::invalid_argument("evaluate: missing assignment for '" + reg_->name(i) + "'");
        K pw = *v[i];
        for (uint32_t k = 1; k < e; ++k) pw *= *v[i];
        prod *= pw;
      }
      sum += prod;
    }
    return sum;
  }

  /// Homogeneity w.r.t. the sub-grading spanned by `support` (empty = all
  /// variables). Parameters outside the support are ignored.
  bool is_homogeneous(const std::vector<size_t>& support = {}) const {
    if (terms_.empty()) return true;
    auto deg = [&](const Monomial& m) {
      if (support.empty()) return m.degree();
      uint64_t d = 0;
      for (size_t i : support) d += m[i];
      return d;
    };
    uint64_t d0 = deg(terms_[0].mono);
    for (const auto& t : terms_)
      if (deg(t.mono) != d0) return false;
    return true;
  }

 private:
  void require_reg() const {
    if (!reg_) throw std::invalid_argument("polynomial needs a registry");
  }
  K leading_coeff_or_default() const {
    if (!terms_.empty()) {
      K c = terms_[0].coeff;
      return c / c;
    }
    return K{};  // pow(0) of the zero polynomial stays zero-ish; callers guard
  }

  RegistryPtr reg_;
  std::vector<Term<K>> terms_;
};

using RatPoly = Polynomial<Rat>;
using ZpPoly = Polynomial<Zp>;

/// Rebuilds P over `target`, matching variables by name. Every variable the
/// polynomial actually uses must exist in the target registry.
template <class K>
Polynomial<K> transport(const Polynomial<K>& p, const RegistryPtr& target) {
  const auto& src = *p.registry();
  std::vector<std::optional<size_t>> where(src.size());
  for (size_t i = 0; i < src.size(); ++i) where[i] = target->index(src.name(i));
  std::vector<Term<K>> terms;
  for (const auto& t : p.terms()) {
    Monomial m(target->size());
    for (size_t i = 0; i < src.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!where[i])
        throw std::invalid_argument("transport: variable '" + src.name(i) +
                                    "' missing from target registry");
      m[*where[i]] = t.mono[i];
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial<K>::from_terms(target, std::move(terms));
}

/// Ring homomorphism given by variable images. Unmapped variables go to the
/// variable of the same name in the target registry.
template <class K>
Polynomial<K> substitute(const Polynomial<K>& p, const RegistryPtr& target,
                         const std::map<std::string, Polynomial<K>>& images) {
  const auto& src = *p.registry();
  for (const auto& [name, img] : images) {
    if (!src.has(name))
      throw std::invalid_argument("substitute: '" + name + "' is not a source variable");
    require_same_registry(img.registry(), target);
  }
  Polynomial<K> out = Polynomial<K>::zero(target);
  if (p.is_zero_poly()) return out;
  const K one = p.terms()[0].coeff / p.terms()[0].coeff;
  std::vector<std::optional<Polynomial<K>>> img(src.size());
  auto image_of = [&](size_t i) -> const Polynomial<K>& {
    if (!img[i]) {
      auto it = images.find(src.name(i));
      if (it != images.end()) {
        img[i] = it->second;
      } else {
        auto j = target->index(src.name(i));
        if (!j)
          throw std::invalid_argument("substitute: variable '" + src.name(i) +
                                      "' has no image and is missing from target");
        img[i] = Polynomial<K>::variable(target, *j, one);
      }
    }
    return *img[i];
  };
  for (const auto& t : p.terms()) {
    Polynomial<K> factor = Polynomial<K>::constant(target, t.coeff);
    for (size_t i = 0; i < src.size(); ++i) {
      uint32_t e = t.mono[i];
      if (e == 0) continue;
      const Polynomial<K>& base = image_of(i);
      Polynomial<K> pw = base;
      for (uint32_t k = 1; k < e; ++k) pw *= base;
      factor *= pw;
    }
    out += factor;
  }
  return out;
}

/// P with every term padded by a power of the fresh variable `var` up to the
/// total degree of P. Errors when `var` already belongs to P's registry.
template <class K>
Polynomial<K> homogenize(const Polynomial<K>& p, const std::string& var) {
  if (p.registry()->has(var))
    throw std::invalid_argument("homogenize: variable '" + var + "' already present");
  RegistryPtr ext = p.registry()->extended({var});
  size_t vi = ext->size() - 1;
  int64_t d = p.total_degree();
  std::vector<Term<K>> terms;
  for (const auto& t : p.terms()) {
    Monomial m(ext->size());
    for (size_t i = 0; i + 1 < ext->size(); ++i) m[i] = t.mono[i];
    m[vi] = static_cast<uint32_t>(d - t.mono.degree());
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial<K>::from_terms(ext, std::move(terms));
}

}  // namespace lgm

#endif
