#ifndef LGM_SAMPLING_HPP
#define LGM_SAMPLING_HPP

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgm/polynomial.hpp"

namespace lgm {

namespace detail {

/// Unbiased draw from [0, n). mt19937_64 output is fully specified by the
/// standard, so seeded runs match across platforms; the standard integer
/// distributions do not guarantee that.
inline uint64_t bounded(std::mt19937_64& rng, uint64_t n) {
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace detail

/// Coefficient-wise change of field.
template <class K>
Polynomial<K> convert_coeffs(const RatPoly& p, const FieldCtx& ctx) {
  std::vector<Term<K>> terms;
  for (const auto& t : p.terms())
    terms.push_back({t.mono, FieldIO<K>::from_rat(t.coeff, ctx)});
  return Polynomial<K>::from_terms(p.registry(), std::move(terms));
}

inline ZpPoly reduce_mod_p(const RatPoly& p, uint32_t prime) {
  return convert_coeffs<Zp>(p, FieldCtx::prime(prime));
}

struct SmoothnessReport {
  uint64_t attempts = 0;  // random points drawn
  uint64_t usable = 0;    // points lying on the hypersurface
  uint64_t smooth = 0;    // usable points where some listed partial is nonzero
  Rat fraction;           // smooth / usable, exact
};

/// Rejection sampling over Z/p: draw uniform points of the full coordinate
/// space, keep those on V(P), and test the partials in `vars` there. Stops
/// after `trials` usable points or 100*trials attempts, whichever comes
/// first; errors when fewer than trials/10 usable points turn up, since the
/// estimate would be noise.
inline SmoothnessReport sample_smoothness(const RatPoly& p,
                                          const std::vector<std::string>& vars,
                                          uint64_t trials, uint64_t seed,
                                          uint32_t prime = 101) {
  if (trials == 0) throw std::invalid_argument("sample_smoothness: zero trials");
  const RegistryPtr& reg = p.registry();
  ZpPoly pp = reduce_mod_p(p, prime);
  std::vector<ZpPoly> partials;
  for (const auto& v : vars)
    partials.push_back(pp.derivative(reg->index_checked(v)));

  std::mt19937_64 rng(seed);
  SmoothnessReport rep;
  const uint64_t budget = 100 * trials;
  std::map<std::string, Zp> point;
  while (rep.usable < trials && rep.attempts < budget) {
    ++rep.attempts;
    for (size_t i = 0; i < reg->size(); ++i)
      point[reg->name(i)] = Zp(detail::bounded(rng, prime), prime);
    if (!is_zero(pp.evaluate(point))) continue;
    ++rep.usable;
    for (const auto& d : partials)
      if (!is_zero(d.evaluate(point))) {
        ++rep.smooth;
        break;
      }
  }
  if (rep.usable < std::max<uint64_t>(1, trials / 10))
    throw std::runtime_error(
        "sample_smoothness: only " + std::to_string(rep.usable) + " of " +
        std::to_string(trials) + " requested points found on the hypersurface");
  rep.fraction = Rat(rep.smooth) / Rat(rep.usable);
  return rep;
}

}  // namespace lgm

#endif
