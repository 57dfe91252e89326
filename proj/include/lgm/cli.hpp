#ifndef LGM_CLI_HPP
#define LGM_CLI_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lgm/complexes.hpp"
#include "lgm/mirror.hpp"
#include "lgm/monodromy.hpp"
#include "lgm/sampling.hpp"

namespace lgm::cli {

using json = nlohmann::ordered_json;

struct RunResult {
  int code = 0;  // 0 checks pass, 1 mathematical failure, 2 usage
  std::string out;
};

inline std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline std::string field_label(const FieldCtx& f) {
  return f.p == 0 ? "q" : "zp:" + std::to_string(f.p);
}

/// Parse "q" or "zp:<prime>"; empty optional on bad syntax or nonprime.
inline std::optional<FieldCtx> parse_field(const std::string& s) {
  if (s == "q") return FieldCtx::rationals();
  if (s.rfind("zp:", 0) == 0) {
    try {
      size_t used = 0;
      unsigned long v = std::stoul(s.substr(3), &used);
      if (used != s.size() - 3 || v == 0 || v > 0xffffffffUL) return std::nullopt;
      return FieldCtx::prime(static_cast<uint32_t>(v));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- mirror

inline RunResult run_mirror(size_t n, bool numeric, const Rat& t1,
                            const Rat& t2, bool as_json) {
  MirrorModel m;
  try {
    m = numeric ? mirror_equation(n, t1, t2) : mirror_equation(n);
  } catch (const std::invalid_argument& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
  PencilData p = pencil_polys(m);

  std::string boxed;
  if (n == 2) {
    if (numeric && t1 == Rat(1) && t2 == Rat(1)) {
      // the unit-coefficient surface is usually written over z and w
      std::vector<std::string> names{"x1", "x2", "y1", "y2", "z", "w"};
      RegistryPtr reg = VarRegistry::make(names);
      std::map<std::string, RatPoly> images{
          {"z1", RatPoly::variable(reg, 4, Rat(1))},
          {"w1", RatPoly::variable(reg, 5, Rat(1))}};
      RatPoly renamed = substitute(m.defining, reg, images);
      if (renamed !=
          parse_poly<Rat>("(y1 + w)*(y1 + z) - y1*x1*x2*z*w", reg))
        throw std::logic_error("mirror: factored display drifted");
      boxed = "x1*x2*y1*z*w = (y1 + z)*(y1 + w)";
    } else if (!numeric) {
      RatPoly renamed = lg3_renamed(m);
      RegistryPtr reg = renamed.registry();
      if (renamed != parse_poly<Rat>(
                         "(y1 + t1*x4)*(y1 + t2*x3) - y1*x1*x2*x3*x4", reg))
        throw std::logic_error("mirror: factored display drifted");
      boxed = "x1*x2*x3*x4*y1 = (y1 + t1*x4)*(y1 + t2*x3)";
    } else {
      RatPoly renamed = lg3_renamed(m);
      RegistryPtr reg = renamed.registry();
      RatPoly lhs = parse_poly<Rat>("x1*x2*x3*x4*y1", reg);
      boxed = format_poly(lhs) + " = " + format_poly(renamed + lhs);
    }
  }

  std::string t1s = numeric ? rat_str(t1) : "symbolic";
  std::string t2s = numeric ? rat_str(t2) : "symbolic";
  if (as_json) {
    json j;
    j["command"] = "mirror";
    j["n"] = n;
    j["t1"] = t1s;
    j["t2"] = t2s;
    j["defining"] = format_poly(m.defining);
    j["quadratic_in_y1"] = format_poly(m.expanded);
    j["potential_numerator"] = format_poly(m.potential_num);
    j["potential_denominator"] = format_poly(m.potential_den);
    j["pencil_f"] = format_poly(p.f);
    j["pencil_g"] = format_poly(p.g);
    j["indeterminacy"] = {format_poly(p.f), format_poly(p.g)};
    if (!boxed.empty()) j["boxed"] = boxed;
    return {0, j.dump(2) + "\n"};
  }
  std::ostringstream os;
  os << "rank: " << n << "\n";
  os << "coefficients: t1 = " << t1s << ", t2 = " << t2s << "\n";
  os << "defining: " << format_poly(m.defining) << " = 0\n";
  os << "potential: x2 = (" << format_poly(m.potential_num) << ") / ("
     << format_poly(m.potential_den) << ")\n";
  os << "pencil f: " << format_poly(p.f) << "\n";
  os << "pencil g: " << format_poly(p.g) << "\n";
  os << "indeterminacy generators: f, g as above\n";
  if (!boxed.empty()) os << "boxed: " << boxed << "\n";
  return {0, os.str()};
}

// ----------------------------------------------------------------- theta

inline RunResult run_theta(bool as_json) {
  ThetaSystem sys = theta_equations();
  EliminatedTheta e = theta_eliminate(sys);
  Lg2Surface s = lg2_surface();

  if (as_json) {
    json j;
    j["command"] = "theta";
    j["relation1"] = format_poly(sys.eq1);
    j["relation2"] = format_poly(sys.eq2);
    j["eliminated"] = format_poly(e.cleared);
    j["excluded"] = format_poly(e.excluded);
    j["alpha"] = format_poly(sys.alpha);
    j["beta"] = format_poly(sys.beta_num) + " / " + format_poly(sys.beta_den);
    j["gamma"] = format_poly(sys.gamma);
    j["surface"] = format_poly(s.equation);
    j["surface_potential"] = s.potential;
    j["double_points"] = format_poly(s.double_points);
    json comps = json::array();
    for (const auto& c : s.components) {
      json jc;
      jc["label"] = c.label;
      json gens = json::array();
      for (const auto& g : c.ideal.generators()) gens.push_back(format_poly(g));
      jc["ideal"] = gens;
      comps.push_back(jc);
    }
    j["components"] = comps;
    j["branes"] = s.branes;
    return {0, j.dump(2) + "\n"};
  }
  std::ostringstream os;
  os << "relation 1: " << format_poly(sys.eq1) << " = 0\n";
  os << "relation 2: " << format_poly(sys.eq2) << " = 0\n";
  os << "eliminated curve: " << format_poly(e.cleared) << " = 0\n";
  os << "excluded locus: " << format_poly(e.excluded) << " = 0\n";
  os << "reduced coefficients: alpha = " << format_poly(sys.alpha)
     << ", beta = " << format_poly(sys.beta_num) << " / "
     << format_poly(sys.beta_den) << ", gamma = " << format_poly(sys.gamma)
     << "\n";
  os << "surface: " << format_poly(s.equation) << " = 0\n";
  os << "surface potential: " << s.potential << "\n";
  os << "double points: " << format_poly(s.double_points) << " = 0\n";
  for (const auto& c : s.components) {
    os << "component " << c.label << ": (";
    for (size_t k = 0; k < c.ideal.generators().size(); ++k) {
      if (k) os << ", ";
      os << format_poly(c.ideal.generators()[k]);
    }
    os << ")\n";
  }
  os << "branes: " << s.branes[0] << ", " << s.branes[1] << "\n";
  return {0, os.str()};
}

// ------------------------------------------------------------------- res

inline RunResult run_res(size_t n, size_t i, size_t len, uint32_t D,
                         const FieldCtx& field, bool as_json) {
  std::optional<ChainComplex> c;
  try {
    c.emplace(build_periodic_resolution(n, i, len));
  } catch (const std::exception& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }

  std::vector<std::string> lines;
  for (const auto& m : c->maps()) lines.push_back(print_line(m));

  bool ok_complex = check_complex(*c);
  std::vector<uint64_t> interior;
  std::optional<size_t> first_bad;
  try {
    for (size_t pos = 1; pos < len; ++pos) {
      interior.push_back(truncated_homology_dim(*c, pos, D, field));
      if (interior.back() != 0 && !first_bad) first_bad = pos;
    }
  } catch (const std::invalid_argument& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
  bool ok = ok_complex && !first_bad;

  if (as_json) {
    json j;
    j["command"] = "res";
    j["n"] = n;
    j["i"] = i;
    j["len"] = len;
    j["degree_bound"] = D;
    j["field"] = field_label(field);
    j["transcript"] = lines;
    j["complex_ok"] = ok_complex;
    json positions = json::array();
    for (size_t pos = 1; pos < len; ++pos) {
      json jp;
      jp["position"] = pos;
      jp["homology_dim"] = interior[pos - 1];
      positions.push_back(jp);
    }
    j["interior"] = positions;
    j["ok"] = ok;
    return {ok ? 0 : 1, j.dump(2) + "\n"};
  }
  std::ostringstream os;
  for (const auto& l : lines) os << l << "\n";
  os << "complex check: " << (ok_complex ? "ok" : "FAILED") << "\n";
  os << "exactness window (degree bound " << D << ", field "
     << field_label(field) << "): ";
  if (!first_bad) {
    if (len >= 2)
      os << "positions 1.." << len - 1 << " exact\n";
    else
      os << "no interior positions\n";
  } else {
    os << "position " << *first_bad << " has homology dimension "
       << interior[*first_bad - 1] << "\n";
  }
  return {ok ? 0 : 1, os.str()};
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  uint64_t seed = 2024;
  uint32_t degree_bound = 4;
  FieldCtx field = FieldCtx::rationals();
  size_t n = 0;     // restrict the ext suite to one rank (0 = all)
  size_t i = 0;     // restrict the ext suite to one pair (0 = all)
  size_t j = 0;
  size_t kmax = 4;
  bool as_json = false;
};

namespace detail {

struct Check {
  std::string name;
  std::function<bool()> fn;
};

inline void sings3_checks(std::vector<Check>& out, const VerifyOptions& opt) {
  out.push_back({"quartic family jacobian spans six generators", [] {
                   RatPoly p = lg3_renamed(mirror_equation(2));
                   auto jac = jacobian_ideal(
                       p, {"x1", "x2", "x3", "x4", "y1"});
                   return jac.generators().size() == 6;
                 }});
  auto component_check = [](int which) {
    RatPoly p = lg3_renamed(mirror_equation(2));
    RegistryPtr reg = p.registry();
    auto jac = jacobian_ideal(p, {"x1", "x2", "x3", "x4", "y1"});
    IdealBasis<Rat> comp =
        which == 1
            ? IdealBasis<Rat>(reg, {parse_poly<Rat>("y1", reg),
                                    parse_poly<Rat>("x3", reg),
                                    parse_poly<Rat>("x4", reg)})
            : IdealBasis<Rat>(reg, {parse_poly<Rat>("x1", reg),
                                    parse_poly<Rat>("x2", reg),
                                    parse_poly<Rat>("y1 + t2*x3", reg),
                                    parse_poly<Rat>("y1 + t1*x4", reg)});
    return vanishes_on_component(jac.generators(), comp);
  };
  out.push_back({"singular component 1 of the quartic family",
                 [component_check] { return component_check(1); }});
  out.push_back({"singular component 2 of the quartic family",
                 [component_check] { return component_check(2); }});
  out.push_back({"nearby plane is not a singular component", [] {
                   RatPoly p = lg3_renamed(mirror_equation(2));
                   RegistryPtr reg = p.registry();
                   auto jac =
                       jacobian_ideal(p, {"x1", "x2", "x3", "x4", "y1"});
                   IdealBasis<Rat> wrong(reg,
                                         {parse_poly<Rat>("x1", reg),
                                          parse_poly<Rat>("x2", reg),
                                          parse_poly<Rat>("y1", reg)});
                   return !vanishes_on_component(jac.generators(), wrong);
                 }});
  out.push_back({"smooth fraction off the singular locus", [opt] {
                   MirrorModel m = mirror_equation(2, Rat(1), Rat(1));
                   RatPoly p = lg3_renamed(m);
                   auto rep = sample_smoothness(
                       p, {"x1", "x2", "x3", "x4", "y1"}, 100, opt.seed, 101);
                   return rep.fraction >= Rat(95) / Rat(100);
                 }});
}

inline void ext_checks(std::vector<Check>& out, const VerifyOptions& opt) {
  std::vector<size_t> ranks = opt.n ? std::vector<size_t>{opt.n}
                                    : std::vector<size_t>{3, 4, 5};
  for (size_t n : ranks) {
    out.push_back({"ext table closed forms at rank " + std::to_string(n),
                   [n, opt] {
                     for (size_t i = 1; i <= n; ++i)
                       for (size_t j = i + 1; j <= n; ++j) {
                         if (opt.i && i != opt.i) continue;
                         if (opt.j && j != opt.j) continue;
                         auto table = ext_groups(n, i, j, opt.kmax,
                                                 opt.degree_bound);
                         for (const auto& d : table) {
                           if (!d.verified) return false;
                           ExtForm want =
                               d.k == 0 ? ExtForm::ideal_product
                               : d.k % 2 ? ExtForm::odd_cokernel
                                         : ExtForm::zero;
                           if (d.closed_form != want) return false;
                         }
                       }
                     return true;
                   }});
  }
  out.push_back({"odd morphisms at rank 4 have dimension 3 in degree 3",
                 [opt] {
                   auto table = ext_groups(4, 1, 2, 1,
                                           std::max(3u, opt.degree_bound));
                   return table[1].hilbert[3] == 3;
                 }});
  out.push_back({"degree-zero morphisms match the annihilator route", [] {
                   Monomial m(std::vector<uint32_t>{0, 1, 1, 1});
                   auto ker = kernel_of_monomial_mult(m, 4);
                   if (ker.generators().size() != 1) return false;
                   return format_poly(ker.generators()[0]) ==
                          std::string("z1");
                 }});
}

inline void theta_checks(std::vector<Check>& out) {
  out.push_back({"theta elimination clears to the quartic curve", [] {
                   ThetaSystem sys = theta_equations();
                   EliminatedTheta e = theta_eliminate(sys);
                   RatPoly golden = parse_poly<Rat>(
                       "c*th1*th2*th4 - c^2*th1^2 - a*c*th1 - b*c*th1 - a*b",
                       sys.reg);
                   return e.cleared == golden;
                 }});
  out.push_back({"elimination agrees with direct substitution", [] {
                   ThetaSystem sys = theta_equations();
                   EliminatedTheta e = theta_eliminate(sys);
                   RatPoly direct = parse_poly<Rat>(
                       "c*th1*(th2*th4 - a - b - c*th1) - a*b", sys.reg);
                   return e.cleared == direct;
                 }});
  out.push_back({"unit coefficients give the double-point surface", [] {
                   Lg2Surface s = lg2_surface();
                   return s.equation ==
                          parse_poly<Rat>("u*y*x - v*(x^2 + x + 1)", s.reg);
                 }});
  out.push_back({"surface critical fibre splits into three pieces", [] {
                   Lg2Surface s = lg2_surface();
                   if (s.components.size() != 3) return false;
                   for (const auto& c : s.components)
                     if (!vanishes_on_component(
                             std::vector<RatPoly>{s.equation}, c.ideal))
                       return false;
                   return true;
                 }});
  out.push_back({"two branes survive the double-point interchange", [] {
                   return lg2_surface().branes ==
                          std::vector<std::string>{"D0", "D1"};
                 }});
}

inline void monodromy_checks(std::vector<Check>& out) {
  out.push_back({"concrete twist triple composes to the identity", [] {
                   ConcreteTriple t = concrete_triple();
                   TwistMatrix full =
                       twist_mul(t.T3, twist_mul(t.T2, t.T1));
                   return format_twist(full) == "[[1, 0], [0, 1]]";
                 }});
  out.push_back({"first shear fixes the horizontal axis", [] {
                   FixedSpace f = fixed_space(concrete_triple().T1);
                   return f.dimension == 1 &&
                          f.basis[0] == std::array<Rat, 2>{Rat(1), Rat(0)};
                 }});
  out.push_back({"second shear fixes the vertical axis", [] {
                   FixedSpace f = fixed_space(concrete_triple().T2);
                   return f.dimension == 1 &&
                          f.basis[0] == std::array<Rat, 2>{Rat(0), Rat(1)};
                 }});
  out.push_back({"twist at infinity fixes only the origin", [] {
                   return fixed_space(concrete_triple().T3).dimension == 0;
                 }});
  out.push_back({"symbolic twist at infinity matches its closed form", [] {
                   TwistMatrix t3 = symbolic_T3();
                   return format_twist(t3) ==
                          "(1/(x2*y1)) * [[x1*y2 + y1, -x1*x2], [-y2, x2]]";
                 }});
  out.push_back({"candidate family kills the first residual only", [] {
                   TwistMatrix t3 = symbolic_T3();
                   RegistryPtr reg = t3.reg;
                   std::array<RatPoly, 2> v{
                       parse_poly<Rat>("x1*x2", reg),
                       parse_poly<Rat>("1 - x2", reg)};
                   auto [r0, r1] = candidate_fixed_check(t3, v);
                   RatPoly golden = parse_poly<Rat>(
                       "y2*x1*x2 + (x1*y2 + y1 - 1)*(1 - x2)", reg);
                   return r0.is_zero_poly() && r1 == golden;
                 }});
}

inline void odp_checks(std::vector<Check>& out, const VerifyOptions& opt) {
  out.push_back({"cone matrix squares to the cone relation", [] {
                   std::vector<std::string> names{"x", "y", "w"};
                   RegistryPtr reg = VarRegistry::make(names);
                   FreeModuleMap a;
                   a.entries = {{parse_poly<Rat>("y", reg),
                                 parse_poly<Rat>("w", reg)},
                                {parse_poly<Rat>("-x", reg),
                                 parse_poly<Rat>("-y", reg)}};
                   return matrix_factorization_check(
                       a, a, parse_poly<Rat>("y^2 - x*w", reg));
                 }});
  out.push_back({"two-periodic cone complex composes to zero", [] {
                   return check_complex(build_odp_resolution(5));
                 }});
  out.push_back({"interior exactness of the cone resolution", [opt] {
                   ChainComplex c = build_odp_resolution(5);
                   for (size_t pos = 1; pos < 5; ++pos)
                     if (truncated_homology_dim(c, pos, 5, opt.field) != 0)
                       return false;
                   return true;
                 }});
  out.push_back({"cone module relations die under the parameter lift", [] {
                   auto reg = VarRegistry::make(
                       std::vector<std::string>{"x", "y", "w", "b0", "b1"});
                   auto target =
                       VarRegistry::make(std::vector<std::string>{"u", "z"});
                   std::map<std::string, RatPoly> lift{
                       {"x", parse_poly<Rat>("u", target)},
                       {"y", parse_poly<Rat>("z*u", target)},
                       {"w", parse_poly<Rat>("z^2*u", target)},
                       {"b0", parse_poly<Rat>("u^2", target)},
                       {"b1", parse_poly<Rat>("z*u^2", target)}};
                   RatPoly r1 = parse_poly<Rat>("b0*y - b1*x", reg);
                   RatPoly r2 = parse_poly<Rat>("b0*w - b1*y", reg);
                   return substitute(r1, target, lift).is_zero_poly() &&
                          substitute(r2, target, lift).is_zero_poly();
                 }});
}

inline void fibre_checks(std::vector<Check>& out) {
  out.push_back({"fibre at infinity has 2n-1 components for ranks 2..8", [] {
                   for (size_t n = 2; n <= 8; ++n)
                     if (fibre_report(mirror_equation(n), FibreSide::infinity)
                             .components.size() != 2 * n - 1)
                       return false;
                   return true;
                 }});
  out.push_back({"fibre at infinity yields n objects for ranks 2..8", [] {
                   for (size_t n = 2; n <= 8; ++n) {
                     FibreReport r =
                         fibre_report(mirror_equation(n), FibreSide::infinity);
                     if (r.objects.size() != n) return false;
                     if (r.symmetry_classes.size() != n) return false;
                   }
                   return true;
                 }});
  out.push_back({"zero fibre contributes one object for ranks 2..8", [] {
                   for (size_t n = 2; n <= 8; ++n)
                     if (fibre_report(mirror_equation(n), FibreSide::zero)
                             .objects.size() != 1)
                       return false;
                   return true;
                 }});
  out.push_back({"generator list has n+1 labels for ranks 2..8", [] {
                   for (size_t n = 2; n <= 8; ++n)
                     if (dsg_generators(n).size() != n + 1) return false;
                   return true;
                 }});
  out.push_back({"vanishing cycles pair bijectively with generators", [] {
                   for (size_t n = 2; n <= 8; ++n) {
                     MirrorMapReport r = mirror_map(n);
                     if (r.pairs.size() != n + 1) return false;
                     if (r.middle_homology_rank != n) return false;
                     std::set<std::string> rights;
                     for (const auto& pr : r.pairs) rights.insert(pr.second);
                     auto gens = dsg_generators(n);
                     if (rights !=
                         std::set<std::string>(gens.begin(), gens.end()))
                       return false;
                   }
                   return true;
                 }});
}

}  // namespace detail

inline RunResult run_verify(const std::string& suite,
                            const VerifyOptions& opt) {
  static const std::vector<std::string> known{
      "sings3", "ext", "theta", "monodromy", "odp", "fibres", "all"};
  if (std::find(known.begin(), known.end(), suite) == known.end())
    return {2, "error: unknown suite '" + suite +
                   "' (expected sings3, ext, theta, monodromy, odp, fibres, "
                   "all)\n"};

  std::vector<detail::Check> checks;
  if (suite == "sings3" || suite == "all") detail::sings3_checks(checks, opt);
  if (suite == "ext" || suite == "all") detail::ext_checks(checks, opt);
  if (suite == "theta" || suite == "all") detail::theta_checks(checks);
  if (suite == "monodromy" || suite == "all") detail::monodromy_checks(checks);
  if (suite == "odp" || suite == "all") detail::odp_checks(checks, opt);
  if (suite == "fibres" || suite == "all") detail::fibre_checks(checks);

  size_t passed = 0, failed = 0;
  std::vector<std::pair<std::string, std::string>> results;
  for (const auto& c : checks) {
    std::string status;
    try {
      status = c.fn() ? "pass" : "fail";
    } catch (const std::exception& e) {
      status = std::string("fail (") + e.what() + ")";
    }
    (status == "pass" ? passed : failed)++;
    results.emplace_back(c.name, status);
  }

  if (opt.as_json) {
    json j;
    j["command"] = "verify";
    j["suite"] = suite;
    j["seed"] = opt.seed;
    j["degree_bound"] = opt.degree_bound;
    j["field"] = field_label(opt.field);
    json arr = json::array();
    for (const auto& [name, status] : results) {
      json je;
      je["name"] = name;
      je["status"] = status;
      arr.push_back(je);
    }
    j["checks"] = arr;
    j["passed"] = passed;
    j["failed"] = failed;
    return {failed == 0 ? 0 : 1, j.dump(2) + "\n"};
  }
  std::ostringstream os;
  os << "suite: " << suite << "\n";
  for (const auto& [name, status] : results)
    os << (status == "pass" ? "[PASS] " : "[FAIL] ") << name
       << (status == "pass" || status == "fail" ? "" : " " + status.substr(4))
       << "\n";
  os << "summary: " << passed << " passed, " << failed << " failed\n";
  return {failed == 0 ? 0 : 1, os.str()};
}

}  // namespace lgm::cli

#endif
