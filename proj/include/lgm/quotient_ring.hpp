#ifndef LGM_QUOTIENT_RING_HPP
#define LGM_QUOTIENT_RING_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "lgm/ideal.hpp"

namespace lgm {

/// Graded quotient of a polynomial ring by homogeneous relations. The degree
/// slices are spanned by standard monomials: those not divisible by any lead
/// of the reduced relation basis.
class QuotientRing {
 public:
  QuotientRing(RegistryPtr reg, std::vector<RatPoly> relations)
      : relations_(std::move(reg), std::move(relations)) {
    for (const auto& r : relations_.generators())
      if (!r.is_homogeneous())
        throw std::invalid_argument("quotient ring: relations must be homogeneous");
    for (const auto& e : relations_.groebner_basis().elements)
      leads_.push_back(e.leading_term(MonomialOrder::grevlex())->mono);
  }

  const RegistryPtr& registry() const { return relations_.registry(); }
  const IdealBasis<Rat>& relations() const { return relations_; }

  RatPoly nf(const RatPoly& p) const { return relations_.reduce(p); }
  bool is_zero_mod(const RatPoly& p) const { return relations_.contains(p); }

  bool is_standard(const Monomial& m) const {
    for (const auto& l : leads_)
      if (l.divides(m)) return false;
    return true;
  }

  /// All standard monomials of exact total degree d, in a fixed generation
  /// order (deterministic across runs).
  std::vector<Monomial> standard_monomials(uint32_t degree) const {
    std::vector<Monomial> out;
    size_t nv = registry()->size();
    Monomial m(nv);
    std::function<void(size_t, uint32_t)> rec = [&](size_t var, uint32_t left) {
      if (var + 1 == nv) {
        m[var] = left;
        if (is_standard(m)) out.push_back(m);
        m[var] = 0;
        return;
      }
      for (uint32_t e = 0; e <= left; ++e) {
        m[var] = e;
        rec(var + 1, left - e);
      }
      m[var] = 0;
    };
    if (nv == 0) {
      if (degree == 0) out.push_back(m);
      return out;
    }
    rec(0, degree);
    return out;
  }

  uint64_t slice_dim(uint32_t degree) const {
    return standard_monomials(degree).size();
  }

 private:
  IdealBasis<Rat> relations_;
  std::vector<Monomial> leads_;
};

}  // namespace lgm

#endif
