#ifndef LGM_MONODROMY_HPP
#define LGM_MONODROMY_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgm/linalg.hpp"
#include "lgm/parse.hpp"

namespace lgm {

/// 2x2 matrix of polynomials with a separately carried denominator, so the
/// inverse twist stays inside the polynomial engine. Integer twists have
/// denominator 1.
struct TwistMatrix {
  RegistryPtr reg;
  std::array<std::array<RatPoly, 2>, 2> m;
  RatPoly den;
};

inline TwistMatrix twist_mul(const TwistMatrix& a, const TwistMatrix& b) {
  TwistMatrix out;
  out.reg = a.reg;
  out.den = a.den * b.den;
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      out.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return out;
}

/// Determinant of the numerator matrix (the full determinant times den^2).
inline RatPoly twist_det_num(const TwistMatrix& t) {
  return t.m[0][0] * t.m[1][1] - t.m[0][1] * t.m[1][0];
}

inline RatPoly twist_trace_num(const TwistMatrix& t) {
  return t.m[0][0] + t.m[1][1];
}

inline bool twist_equal_cleared(const TwistMatrix& a, const TwistMatrix& b) {
  // a/a.den == b/b.den after clearing: b.den * a.m == a.den * b.m
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      if (!(b.den * a.m[i][j] == a.den * b.m[i][j])) return false;
  return true;
}

inline std::string format_twist(const TwistMatrix& t) {
  std::string s = "[[" + format_poly(t.m[0][0]) + ", " + format_poly(t.m[0][1]) +
                  "], [" + format_poly(t.m[1][0]) + ", " +
                  format_poly(t.m[1][1]) + "]]";
  RatPoly one = RatPoly::constant(t.reg, Rat(1));
  if (!(t.den == one)) s = "(1/(" + format_poly(t.den) + ")) * " + s;
  return s;
}

namespace detail {

inline TwistMatrix twist_from(const RegistryPtr& reg,
                              std::array<std::array<const char*, 2>, 2> src,
                              const char* den = "1") {
  TwistMatrix t;
  t.reg = reg;
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) t.m[i][j] = parse_poly<Rat>(src[i][j], reg);
  t.den = parse_poly<Rat>(den, reg);
  return t;
}

inline RegistryPtr twist_registry() {
  std::vector<std::string> names{"x1", "x2", "y1", "y2"};
  return VarRegistry::make(names);
}

}  // namespace detail

/// The two symbolic twists around the finite critical values.
inline TwistMatrix symbolic_T1() {
  return detail::twist_from(detail::twist_registry(),
                            {{{"1", "x1"}, {"0", "y1"}}});
}

inline TwistMatrix symbolic_T2() {
  return detail::twist_from(detail::twist_registry(),
                            {{{"x2", "0"}, {"y2", "1"}}});
}

/// The twist at infinity, the inverse of T2*T1, carried over the cleared
/// denominator x2*y1. Construction is checked by multiplying back:
/// (den*T3)*(T2*T1) must equal den*I exactly.
inline TwistMatrix symbolic_T3() {
  RegistryPtr reg = detail::twist_registry();
  TwistMatrix t3 = detail::twist_from(
      reg, {{{"x1*y2 + y1", "-x1*x2"}, {"-y2", "x2"}}}, "x2*y1");
  TwistMatrix prod = twist_mul(t3, twist_mul(symbolic_T2(), symbolic_T1()));
  RatPoly zero = RatPoly::zero(reg);
  if (!(prod.m[0][0] == t3.den && prod.m[1][1] == t3.den &&
        prod.m[0][1] == zero && prod.m[1][0] == zero))
    throw std::logic_error("twist at infinity fails to invert the product");
  return t3;
}

struct ConcreteTriple {
  TwistMatrix T1, T2, T3;
};

/// Integer specialization x1 = x2 = y1 = y2 = 1.
inline ConcreteTriple concrete_triple() {
  RegistryPtr reg = VarRegistry::make(std::vector<std::string>{});
  ConcreteTriple t;
  t.T1 = detail::twist_from(reg, {{{"1", "1"}, {"0", "1"}}});
  t.T2 = detail::twist_from(reg, {{{"1", "0"}, {"1", "1"}}});
  t.T3 = detail::twist_from(reg, {{{"2", "-1"}, {"-1", "1"}}});
  return t;
}

/// Exact rational fixed vectors: the kernel of M - I.
struct FixedSpace {
  std::vector<std::array<Rat, 2>> basis;
  size_t dimension = 0;
};

inline FixedSpace fixed_space(const TwistMatrix& t) {
  auto scalar_of = [](const RatPoly& p) -> Rat {
    if (p.is_zero_poly()) return Rat(0);
    if (p.total_degree() != 0)
      throw std::invalid_argument("fixed space: entries must be rational numbers");
    return p.terms()[0].coeff;
  };
  Rat den = scalar_of(t.den);
  if (den == Rat(0))
    throw std::invalid_argument("fixed space: zero denominator");
  Matrix<Rat> shifted(2, 2);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      shifted.at(i, j) = scalar_of(t.m[i][j]) / den;
      if (i == j) shifted.at(i, j) -= Rat(1);
    }
  FixedSpace out;
  for (auto& v : kernel_basis(shifted, Rat(1)))
    out.basis.push_back({v[0], v[1]});
  out.dimension = out.basis.size();
  return out;
}

/// Residual of the candidate fixed family against the twist at infinity.
/// Fixed vectors of the inverse of a matrix A are exactly those of A, and
/// the numerator matrix of the twist is adj(A), so A is recovered as the
/// adjugate of the stored numerators; the return value is A*v - v, both
/// components fully expanded. The caller inspects which components vanish
/// identically and which require side conditions.
inline std::pair<RatPoly, RatPoly> candidate_fixed_check(
    const TwistMatrix& t3, const std::array<RatPoly, 2>& v) {
  std::array<std::array<RatPoly, 2>, 2> a{
      {{t3.m[1][1], RatPoly::zero(t3.reg) - t3.m[0][1]},
       {RatPoly::zero(t3.reg) - t3.m[1][0], t3.m[0][0]}}};
  RatPoly r0 = a[0][0] * v[0] + a[0][1] * v[1] - v[0];
  RatPoly r1 = a[1][0] * v[0] + a[1][1] * v[1] - v[1];
  return {r0, r1};
}

}  // namespace lgm

#endif
