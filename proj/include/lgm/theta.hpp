#ifndef LGM_THETA_HPP
#define LGM_THETA_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lgm/ideal.hpp"

namespace lgm {

/// Coordinate-ring relations of the rank-one mirror, written over
/// th1..th4 (the unit generator already set to 1) with symbolic curve-class
/// coefficients a, b, c, d. eq2 is stored with denominators cleared.
struct ThetaSystem {
  RegistryPtr reg;
  RatPoly eq1;  // th2*th4 - (a + b + c*th1 + d*th3)
  RatPoly eq2;  // c*d*th1*th3 - a*b
  RatPoly alpha, gamma;        // c and a+b
  RatPoly beta_num, beta_den;  // a*b over c
};

inline ThetaSystem theta_equations() {
  std::vector<std::string> names{"th1", "th2", "th3", "th4",
                                 "a",   "b",   "c",   "d"};
  RegistryPtr reg = VarRegistry::make(names);
  ThetaSystem sys;
  sys.reg = reg;
  sys.eq1 = parse_poly<Rat>("th2*th4 - a - b - c*th1 - d*th3", reg);
  sys.eq2 = parse_poly<Rat>("c*d*th1*th3 - a*b", reg);
  sys.alpha = parse_poly<Rat>("c", reg);
  sys.gamma = parse_poly<Rat>("a + b", reg);
  sys.beta_num = parse_poly<Rat>("a*b", reg);
  sys.beta_den = parse_poly<Rat>("c", reg);
  return sys;
}

/// The curve obtained by eliminating th3 between the two relations, with all
/// denominators cleared: c*th1*th2*th4 - c^2*th1^2 - (a+b)*c*th1 - a*b.
/// The locus th1 = 0 is excluded (th1 was inverted during elimination).
struct EliminatedTheta {
  RatPoly cleared;
  RatPoly excluded;
};

inline EliminatedTheta theta_eliminate(const ThetaSystem& sys) {
  const RegistryPtr& reg = sys.reg;
  RatPoly c = parse_poly<Rat>("c", reg);
  RatPoly d = parse_poly<Rat>("d", reg);
  if (sys.eq2.is_zero_poly() || c.is_zero_poly() || d.is_zero_poly())
    throw std::invalid_argument("theta: elimination divides by c*d");
  // Multiplying eq1 by c*d*th1 turns its th3 term into a multiple of
  // c*d*th1*th3, which eq2 rewrites to a*b; the leftover factor d divides
  // out exactly.
  RatPoly scaled = parse_poly<Rat>("c*d*th1", reg) * sys.eq1;
  IdealBasis<Rat> rel(reg, {sys.eq2});
  RatPoly reduced = rel.reduce(scaled);
  auto th3 = reg->index("th3");
  for (const auto& t : reduced.terms())
    if (t.mono[*th3] != 0)
      throw std::logic_error("theta: elimination failed to remove th3");
  EliminatedTheta out;
  out.cleared = divide_exact(reduced, d);
  out.excluded = parse_poly<Rat>("th1", reg);
  return out;
}

/// One labeled irreducible piece of a critical fibre.
struct ComponentRecord {
  std::string label;
  IdealBasis<Rat> ideal;
  std::string note;
};

/// The rank-one mirror surface u*y*x = v*(x^2+x+1) in the chart coordinates
/// (x, y, [u:v]), with its potential, critical-fibre decomposition, and the
/// object count after the involution identifying the two double-point
/// components (recorded from the source construction, not recomputed).
struct Lg2Surface {
  RegistryPtr reg;  // x, y, u, v
  RatPoly equation;
  RatPoly excluded;           // x = 0 removed from the chart
  std::string potential;      // projection onto y
  std::vector<ComponentRecord> components;
  RatPoly double_points;      // x^2 + x + 1, roots kept symbolic as x1, x2
  std::vector<std::string> branes;
  std::string identification;
};

inline Lg2Surface lg2_surface() {
  // Specialize the eliminated curve's reduced coefficients to 1:
  // th1*th2*th4 = th1^2 + th1 + 1, then rename th1 -> x, th2 -> y and view
  // th4 as the projective ratio u/v, clearing v.
  std::vector<std::string> names{"x", "y", "u", "v"};
  RegistryPtr reg = VarRegistry::make(names);
  Lg2Surface s;
  s.reg = reg;
  s.equation = parse_poly<Rat>("u*y*x - v*(x^2 + x + 1)", reg);
  s.excluded = parse_poly<Rat>("x", reg);
  s.potential = "y";
  s.double_points = parse_poly<Rat>("x^2 + x + 1", reg);

  ComponentRecord y0{"Y0",
                     IdealBasis<Rat>(reg, {parse_poly<Rat>("y", reg),
                                           parse_poly<Rat>("v", reg)}),
                     "x free and nonzero, [u:v] = [1:0]"};
  ComponentRecord y1{"Y1",
                     IdealBasis<Rat>(reg, {parse_poly<Rat>("y", reg),
                                           parse_poly<Rat>("x^2 + x + 1", reg)}),
                     "x = x1, [u:v] free"};
  ComponentRecord y2{"Y2",
                     IdealBasis<Rat>(reg, {parse_poly<Rat>("y", reg),
                                           parse_poly<Rat>("x^2 + x + 1", reg)}),
                     "x = x2, [u:v] free"};
  s.components = {y0, y1, y2};
  s.branes = {"D0", "D1"};
  s.identification = "x -> -x interchanges the double-point branes";
  return s;
}

/// Reference morphism data for the two surviving branes, shift-indexed free
/// ranks. Source material, emitted verbatim rather than recomputed.
struct ShiftRank {
  int shift;
  uint64_t rank;
};

struct Lg2HomTable {
  // entry[i][j] lists Hom(L_i, L_j) as free ranks per shift
  std::vector<ShiftRank> entry[2][2];
  bool reference_only = true;
};

inline Lg2HomTable hom_table_lg2() {
  Lg2HomTable t;
  t.entry[0][0] = {{0, 1}};
  t.entry[1][1] = {{0, 1}};
  t.entry[0][1] = {{0, 1}, {-1, 1}};
  t.entry[1][0] = {};
  return t;
}

/// The sl(3) rational potential: numerator l1*x1*y1 + l2*x2*y2 + l3*x3*y3
/// over denominator x1*y1 + x2*y2 + x3*y3, the denominator cutting out the
/// flag locus and the pair generating the indeterminacy ideal.
struct RationalPotential {
  RegistryPtr reg;
  RatPoly numerator;
  RatPoly denominator;
  IdealBasis<Rat> flag_ideal;
  IdealBasis<Rat> indeterminacy;
};

inline RationalPotential rational_potential_sl3(const Rat& l1, const Rat& l2,
                                                const Rat& l3) {
  if (l1 + l2 + l3 != Rat(0))
    throw std::invalid_argument("rational potential: eigenvalues must sum to zero");
  if (l1 == Rat(0) && l2 == Rat(0) && l3 == Rat(0))
    throw std::invalid_argument("rational potential: zero eigenvalue triple is degenerate");
  std::vector<std::string> names{"x1", "x2", "x3", "y1", "y2", "y3"};
  RegistryPtr reg = VarRegistry::make(names);
  RationalPotential r;
  r.reg = reg;
  RatPoly p1 = parse_poly<Rat>("x1*y1", reg);
  RatPoly p2 = parse_poly<Rat>("x2*y2", reg);
  RatPoly p3 = parse_poly<Rat>("x3*y3", reg);
  r.numerator = RatPoly::constant(reg, l1) * p1 + RatPoly::constant(reg, l2) * p2 +
                RatPoly::constant(reg, l3) * p3;
  r.denominator = p1 + p2 + p3;
  r.flag_ideal = IdealBasis<Rat>(reg, {r.denominator});
  r.indeterminacy = IdealBasis<Rat>(reg, {r.numerator, r.denominator});
  return r;
}

/// Symbolic variant: eigenvalues stay as ring variables l1, l2, l3.
inline RationalPotential rational_potential_sl3_symbolic() {
  std::vector<std::string> names{"x1", "x2", "x3", "y1", "y2", "y3",
                                 "l1", "l2", "l3"};
  RegistryPtr reg = VarRegistry::make(names);
  RationalPotential r;
  r.reg = reg;
  r.numerator = parse_poly<Rat>("l1*x1*y1 + l2*x2*y2 + l3*x3*y3", reg);
  r.denominator = parse_poly<Rat>("x1*y1 + x2*y2 + x3*y3", reg);
  r.flag_ideal = IdealBasis<Rat>(reg, {r.denominator});
  r.indeterminacy = IdealBasis<Rat>(reg, {r.numerator, r.denominator});
  return r;
}

}  // namespace lgm

#endif
