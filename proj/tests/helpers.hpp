#ifndef LGM_TEST_HELPERS_HPP
#define LGM_TEST_HELPERS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lgm/parse.hpp"
#include "lgm/polynomial.hpp"

namespace lgmtest {

using namespace lgm;

/// Unbiased draw from [0, n); mt19937_64 is fully specified by the standard,
/// so seeded runs are identical on every platform (std::uniform_int_distribution
/// is not, which is why it is avoided here and in the library).
inline uint64_t bounded(std::mt19937_64& rng, uint64_t n) {
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline int64_t signed_range(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  return lo + static_cast<int64_t>(bounded(rng, static_cast<uint64_t>(hi - lo + 1)));
}

inline RegistryPtr test_registry(size_t nvars) {
  std::vector<std::string> names;
  for (size_t i = 0; i < nvars; ++i) names.push_back("v" + std::to_string(i + 1));
  return VarRegistry::make(names);
}

inline Monomial random_monomial(std::mt19937_64& rng, size_t nvars, uint32_t maxdeg) {
  Monomial m(nvars);
  uint32_t budget = static_cast<uint32_t>(bounded(rng, maxdeg + 1));
  for (uint32_t k = 0; k < budget; ++k) {
    size_t i = bounded(rng, nvars);
    m[i] += 1;
  }
  return m;
}

inline RatPoly random_rat_poly(std::mt19937_64& rng, const RegistryPtr& reg,
                               uint32_t maxdeg, size_t maxterms,
                               int64_t coeff_lo = -9, int64_t coeff_hi = 9) {
  std::vector<Term<Rat>> terms;
  size_t nt = bounded(rng, maxterms + 1);
  for (size_t t = 0; t < nt; ++t) {
    Rat c(signed_range(rng, coeff_lo, coeff_hi));
    terms.push_back({random_monomial(rng, reg->size(), maxdeg), c});
  }
  return RatPoly::from_terms(reg, std::move(terms));
}

inline ZpPoly random_zp_poly(std::mt19937_64& rng, const RegistryPtr& reg,
                             uint32_t maxdeg, size_t maxterms, uint32_t p) {
  std::vector<Term<Zp>> terms;
  size_t nt = bounded(rng, maxterms + 1);
  for (size_t t = 0; t < nt; ++t) {
    Zp c(bounded(rng, p), p);
    terms.push_back({random_monomial(rng, reg->size(), maxdeg), c});
  }
  return ZpPoly::from_terms(reg, std::move(terms));
}

}  // namespace lgmtest

#endif
