#ifndef LGM_MIRROR_HPP
#define LGM_MIRROR_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgm/ext.hpp"
#include "lgm/theta.hpp"

namespace lgm {

/// The rank-n mirror variety (y1 + t1*prod w)(y1 + t2*prod z) =
/// y1*x1*x2*prod(w z) together with the fraction expressing x2 as a
/// potential. Coefficients t1, t2 are ring variables in symbolic mode and
/// fixed rationals otherwise.
struct MirrorModel {
  size_t n = 0;
  bool symbolic_t = true;
  Rat t1_value{1}, t2_value{1};
  RegistryPtr reg;  // x1, x2, y1, y2, z's, w's, then t1, t2 when symbolic
  RatPoly defining;
  RatPoly expanded;  // the same relation arranged as a quadratic in y1
  RatPoly potential_num, potential_den;
};

namespace detail {

inline MirrorModel build_mirror(size_t n, bool symbolic, const Rat& t1,
                                const Rat& t2) {
  if (n < 2)
    throw std::invalid_argument(
        "mirror: rank must be at least 2 (the rank-1 model is the theta surface)");
  MirrorModel m;
  m.n = n;
  m.symbolic_t = symbolic;
  m.t1_value = t1;
  m.t2_value = t2;
  std::vector<std::string> names{"x1", "x2", "y1", "y2"};
  for (size_t k = 1; k < n; ++k) names.push_back("z" + std::to_string(k));
  for (size_t k = 1; k < n; ++k) names.push_back("w" + std::to_string(k));
  if (symbolic) {
    names.push_back("t1");
    names.push_back("t2");
  }
  RegistryPtr reg = VarRegistry::make(names);
  m.reg = reg;

  auto var = [&](const std::string& v) {
    return RatPoly::variable(reg, *reg->index(v), Rat(1));
  };
  RatPoly prod_z = RatPoly::constant(reg, Rat(1));
  RatPoly prod_w = RatPoly::constant(reg, Rat(1));
  for (size_t k = 1; k < n; ++k) {
    prod_z *= var("z" + std::to_string(k));
    prod_w *= var("w" + std::to_string(k));
  }
  RatPoly T1 = symbolic ? var("t1") : RatPoly::constant(reg, t1);
  RatPoly T2 = symbolic ? var("t2") : RatPoly::constant(reg, t2);
  RatPoly y1 = var("y1");

  RatPoly fac_w = y1 + T1 * prod_w;
  RatPoly fac_z = y1 + T2 * prod_z;
  RatPoly cross = y1 * var("x1") * var("x2") * prod_w * prod_z;
  m.defining = fac_w * fac_z - cross;
  m.expanded = y1 * y1 + y1 * (T1 * prod_w + T2 * prod_z -
                               var("x1") * var("x2") * prod_w * prod_z) +
               T1 * T2 * prod_w * prod_z;
  m.potential_num = fac_w * fac_z;
  m.potential_den = y1 * var("x1") * prod_w * prod_z;
  return m;
}

}  // namespace detail

inline MirrorModel mirror_equation(size_t n) {
  return detail::build_mirror(n, true, Rat(1), Rat(1));
}

inline MirrorModel mirror_equation(size_t n, const Rat& t1, const Rat& t2) {
  return detail::build_mirror(n, false, t1, t2);
}

/// The rank-2 model rewritten over x1..x4, y1 with w1 -> x4, z1 -> x3, the
/// presentation its singular-locus analysis uses.
inline RatPoly lg3_renamed(const MirrorModel& m) {
  if (m.n != 2)
    throw std::invalid_argument("mirror: the x3/x4 form exists only at rank 2");
  std::vector<std::string> names{"x1", "x2", "x3", "x4", "y1"};
  if (m.symbolic_t) {
    names.push_back("t1");
    names.push_back("t2");
  }
  RegistryPtr reg = VarRegistry::make(names);
  std::map<std::string, RatPoly> images{
      {"w1", RatPoly::variable(reg, 3, Rat(1))},
      {"z1", RatPoly::variable(reg, 2, Rat(1))},
      {"y2", RatPoly::constant(reg, Rat(1))}};
  return substitute(m.defining, reg, images);
}

/// The compactifying pencil: f and g homogeneous of degree 2n-1 in the
/// geometric variables (y's, z's, w's), with base ideal (f, g).
struct PencilData {
  RatPoly f, g;
  IdealBasis<Rat> indeterminacy;
};

inline PencilData pencil_polys(const MirrorModel& m) {
  const RegistryPtr& reg = m.reg;
  auto var = [&](const std::string& v) {
    return RatPoly::variable(reg, *reg->index(v), Rat(1));
  };
  RatPoly prod_z = RatPoly::constant(reg, Rat(1));
  RatPoly prod_w = RatPoly::constant(reg, Rat(1));
  RatPoly prod_zw = RatPoly::constant(reg, Rat(1));
  for (size_t k = 1; k < m.n; ++k) {
    prod_z *= var("z" + std::to_string(k));
    prod_w *= var("w" + std::to_string(k));
    prod_zw *= var("z" + std::to_string(k)) * var("w" + std::to_string(k));
  }
  RatPoly T1 = m.symbolic_t ? var("t1") : RatPoly::constant(reg, m.t1_value);
  RatPoly T2 = m.symbolic_t ? var("t2") : RatPoly::constant(reg, m.t2_value);
  RatPoly head = var("y1");
  for (size_t k = 2; k < m.n; ++k) head *= var("y2");  // y1 * y2^(n-2)

  PencilData p;
  p.f = (head + T1 * prod_w) * (head + T2 * prod_z) * var("y2");
  p.g = var("y1") * prod_zw;

  // both members must be homogeneous of degree 2n-1 in the geometric
  // variables; anything else signals a construction bug
  std::vector<size_t> geometric;
  for (size_t v = 0; v < reg->size(); ++v) {
    const std::string& nm = reg->name(v);
    if (nm[0] == 'y' || nm[0] == 'z' || nm[0] == 'w') geometric.push_back(v);
  }
  for (const RatPoly* q : {&p.f, &p.g})
    for (const auto& t : q->terms()) {
      uint32_t deg = 0;
      for (size_t v : geometric) deg += t.mono[v];
      if (deg != 2 * m.n - 1)
        throw std::logic_error("pencil: member is not homogeneous of degree 2n-1");
    }
  p.indeterminacy = IdealBasis<Rat>(reg, {p.f, p.g});
  return p;
}

enum class FibreSide { zero, infinity };

/// Component decomposition of one of the two critical fibres, with the
/// partition of components under the z/w interchange and the surviving
/// object labels.
struct FibreReport {
  FibreSide fibre = FibreSide::zero;
  std::vector<ComponentRecord> components;
  std::vector<std::vector<std::string>> symmetry_classes;
  std::vector<std::string> objects;
};

inline FibreReport fibre_report(const MirrorModel& m, FibreSide which) {
  const RegistryPtr& reg = m.reg;
  auto var = [&](const std::string& v) {
    return RatPoly::variable(reg, *reg->index(v), Rat(1));
  };
  FibreReport r;
  r.fibre = which;
  if (which == FibreSide::zero) {
    RatPoly prod_z = RatPoly::constant(reg, Rat(1));
    RatPoly prod_w = RatPoly::constant(reg, Rat(1));
    for (size_t k = 1; k < m.n; ++k) {
      prod_z *= var("z" + std::to_string(k));
      prod_w *= var("w" + std::to_string(k));
    }
    RatPoly T1 = m.symbolic_t ? var("t1") : RatPoly::constant(reg, m.t1_value);
    RatPoly T2 = m.symbolic_t ? var("t2") : RatPoly::constant(reg, m.t2_value);
    r.components.push_back(
        {"D_z", IdealBasis<Rat>(reg, {var("y1") + T2 * prod_z}),
         "vanishing of the z-side factor"});
    r.components.push_back(
        {"D_w", IdealBasis<Rat>(reg, {var("y1") + T1 * prod_w}),
         "vanishing of the w-side factor"});
    r.symmetry_classes = {{"D_z", "D_w"}};
    r.objects = {"F(z0)"};
    return r;
  }
  r.components.push_back(
      {"y1", IdealBasis<Rat>(reg, {var("y1")}), "F(z" + std::to_string(m.n) +
                                                    ") := F(y1) lives here"});
  r.symmetry_classes.push_back({"y1"});
  for (size_t k = 1; k < m.n; ++k) {
    std::string zk = "z" + std::to_string(k), wk = "w" + std::to_string(k);
    r.components.push_back({zk, IdealBasis<Rat>(reg, {var(zk)}), ""});
    r.components.push_back({wk, IdealBasis<Rat>(reg, {var(wk)}), ""});
    r.symmetry_classes.push_back({zk, wk});
  }
  for (size_t k = 1; k <= m.n; ++k)
    r.objects.push_back("F(z" + std::to_string(k) + ")");
  return r;
}

/// The n+1 generators of the singularity category, the union of the two
/// fibre reports' objects.
inline std::vector<std::string> dsg_generators(size_t n) {
  MirrorModel m = mirror_equation(n);
  FibreReport zero = fibre_report(m, FibreSide::zero);
  FibreReport inf = fibre_report(m, FibreSide::infinity);
  std::vector<std::string> out = zero.objects;
  out.insert(out.end(), inf.objects.begin(), inf.objects.end());
  return out;
}

/// Vanishing-cycle labels matched with sheaf labels: L_i with F(z_i) for
/// i = 1..n and the last cycle L_{n+1} with F(z0); the middle homology of a
/// smooth fibre on the other side has rank n.
struct MirrorMapReport {
  std::vector<std::pair<std::string, std::string>> pairs;
  size_t middle_homology_rank = 0;
};

inline MirrorMapReport mirror_map(size_t n) {
  if (n < 2) throw std::invalid_argument("mirror map: rank must be at least 2");
  MirrorMapReport r;
  for (size_t k = 1; k <= n; ++k)
    r.pairs.emplace_back("L" + std::to_string(k), "F(z" + std::to_string(k) + ")");
  r.pairs.emplace_back("L" + std::to_string(n + 1), "F(z0)");
  r.middle_homology_rank = n;
  return r;
}

/// Morphisms between singularity-category generators: zero from F(z0) to any
/// infinity-fibre object; for distinct indices 1 <= i, j <= n the shift-k
/// piece is the k-th ext table entry. Pairs the table does not cover are
/// rejected.
struct HomEntry {
  size_t n = 0, i = 0, j = 0;
  bool zero_entry = false;
  std::vector<ExtDescriptor> shifts;  // index = shift degree k
};

inline HomEntry hom_sheaves(size_t n, size_t i, size_t j, size_t kmax,
                            uint32_t D = 4) {
  if (n < 2) throw std::invalid_argument("hom: rank must be at least 2");
  if (i > n || j > n) throw std::invalid_argument("hom: index out of range");
  HomEntry e;
  e.n = n;
  e.i = i;
  e.j = j;
  if (i == 0 && j >= 1) {
    e.zero_entry = true;
    return e;
  }
  if (i == j || j == 0)
    throw std::invalid_argument("hom: pair not tabulated");
  e.shifts = ext_groups(n, i, j, kmax, D);
  return e;
}

}  // namespace lgm

#endif
