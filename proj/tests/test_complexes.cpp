#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "helpers.hpp"
#include "lgm/complexes.hpp"

using namespace lgm;
using namespace lgmtest;

namespace {

RegistryPtr zreg(size_t n) {
  std::vector<std::string> names;
  for (size_t k = 1; k <= n; ++k) names.push_back("z" + std::to_string(k));
  return VarRegistry::make(names);
}

QuotientRing product_ring(size_t n) {
  auto reg = zreg(n);
  RatPoly full = RatPoly::constant(reg, Rat(1));
  for (size_t k = 0; k < n; ++k) full *= RatPoly::variable(reg, k, Rat(1));
  return QuotientRing(reg, {full});
}

std::vector<std::string> transcript(const ChainComplex& c) {
  std::vector<std::string> out;
  for (const auto& m : c.maps()) out.push_back(print_line(m));
  return out;
}

}  // namespace

TEST_CASE("quotient ring slices count standard monomials", "[homology]") {
  auto ring = product_ring(4);
  std::vector<uint64_t> dims;
  for (uint32_t d = 0; d <= 6; ++d) dims.push_back(ring.slice_dim(d));
  CHECK(dims == std::vector<uint64_t>{1, 4, 10, 20, 34, 52, 74});

  auto reg = VarRegistry::make({"x", "y", "w"});
  QuotientRing cone(reg, {parse_poly("y^2 - x*w", reg)});
  std::vector<uint64_t> cdims;
  for (uint32_t d = 0; d <= 5; ++d) cdims.push_back(cone.slice_dim(d));
  CHECK(cdims == std::vector<uint64_t>{1, 3, 5, 7, 9, 11});

  CHECK(ring.is_zero_mod(parse_poly("z1*z2*z3*z4", zreg(4))));
  CHECK_FALSE(ring.is_zero_mod(parse_poly("z1^2", zreg(4))));
  CHECK_THROWS_AS(QuotientRing(reg, {parse_poly("x^2 + y", reg)}),
                  std::invalid_argument);
}

TEST_CASE("periodic resolution transcript", "[homology]") {
  auto c = build_periodic_resolution(4, 1, 5);
  CHECK(transcript(c) == std::vector<std::string>{
                             "S^1 <--[z1]-- S^1", "S^1 <--[z2*z3*z4]-- S^1",
                             "S^1 <--[z1]-- S^1", "S^1 <--[z2*z3*z4]-- S^1",
                             "S^1 <--[z1]-- S^1"});
  CHECK(check_complex(c));

  CHECK(transcript(build_periodic_resolution(4, 2, 4)) ==
        std::vector<std::string>{"S^1 <--[z2]-- S^1", "S^1 <--[z1*z3*z4]-- S^1",
                                 "S^1 <--[z2]-- S^1", "S^1 <--[z1*z3*z4]-- S^1"});

  CHECK(transcript(build_periodic_resolution(2, 1, 2)) ==
        std::vector<std::string>{"S^1 <--[z1]-- S^1", "S^1 <--[z2]-- S^1"});

  CHECK_THROWS_AS(build_periodic_resolution(4, 9, 4), std::out_of_range);
  CHECK_THROWS_AS(build_periodic_resolution(4, 0, 4), std::out_of_range);
  CHECK_THROWS_AS(build_periodic_resolution(4, 1, 1), std::invalid_argument);
}

TEST_CASE("resolutions are two periodic", "[homology]") {
  for (size_t n = 2; n <= 6; ++n)
    for (size_t i = 1; i <= n; ++i) {
      auto c = build_periodic_resolution(n, i, 6);
      for (size_t k = 0; k + 2 < c.length(); ++k)
        CHECK(c.maps()[k].entries == c.maps()[k + 2].entries);
    }
}

TEST_CASE("complex condition is checked, not assumed", "[homology]") {
  auto reg = zreg(4);
  auto ring = product_ring(4);
  auto z1 = parse_poly("z1", reg);

  ChainComplex bad(ring, {FreeModuleMap::scalar(z1), FreeModuleMap::scalar(z1)});
  CHECK_FALSE(check_complex(bad));

  ChainComplex zero(ring, {FreeModuleMap::scalar(RatPoly::zero(reg)),
                           FreeModuleMap::scalar(RatPoly::zero(reg))});
  CHECK(check_complex(zero));

  // entries are reduced on construction
  ChainComplex red(ring, {FreeModuleMap::scalar(z1 + parse_poly("z1*z2*z3*z4", reg)),
                          FreeModuleMap::scalar(parse_poly("z2*z3*z4", reg))});
  CHECK(red.maps()[0].entries[0][0] == z1);
  CHECK(check_complex(red));
}

TEST_CASE("matrix factorization identities", "[homology]") {
  auto reg = VarRegistry::make({"x", "y", "w"});
  FreeModuleMap a;
  a.entries = {{parse_poly("y", reg), parse_poly("w", reg)},
               {parse_poly("-x", reg), parse_poly("-y", reg)}};
  CHECK(matrix_factorization_check(a, a, parse_poly("y^2 - x*w", reg)));
  CHECK_FALSE(matrix_factorization_check(a, a, parse_poly("y^2 + x*w", reg)));

  FreeModuleMap id2;
  id2.entries = {{parse_poly("1", reg), RatPoly::zero(reg)},
                 {RatPoly::zero(reg), parse_poly("1", reg)}};
  CHECK(matrix_factorization_check(id2, id2, parse_poly("1", reg)));

  FreeModuleMap tiny = FreeModuleMap::scalar(parse_poly("y", reg));
  CHECK_THROWS_AS(matrix_factorization_check(a, tiny, parse_poly("y", reg)),
                  std::invalid_argument);
}

TEST_CASE("factorization complex over the cone ring", "[homology]") {
  auto c = build_odp_resolution(4);
  CHECK(c.length() == 4);
  CHECK(check_complex(c));
  CHECK(print_line(c.maps()[0]) == "S^2 <--[[y, w], [-x, -y]]-- S^2");
  for (size_t k = 0; k + 1 < c.length(); ++k)
    CHECK(c.maps()[k].entries == c.maps()[k + 1].entries);

  for (size_t pos = 1; pos < c.length(); ++pos) {
    CHECK(truncated_homology_dim(c, pos, 5, FieldCtx::prime(101)) == 0);
    CHECK(truncated_homology_dim(c, pos, 5, FieldCtx::rationals()) == 0);
  }
  CHECK_THROWS_AS(build_odp_resolution(1), std::invalid_argument);
}

TEST_CASE("truncated homology of the periodic resolutions", "[homology]") {
  SECTION("flagship case, both fields") {
    auto c = build_periodic_resolution(4, 1, 5);
    CHECK(truncated_homology_dim(c, 1, 6, FieldCtx::prime(101)) == 0);
    CHECK(truncated_homology_dim(c, 1, 6, FieldCtx::rationals()) == 0);
  }

  SECTION("interior exactness sweep") {
    for (size_t n = 2; n <= 5; ++n)
      for (size_t i = 1; i <= n; ++i) {
        auto c = build_periodic_resolution(n, i, 5);
        for (size_t pos = 1; pos < c.length(); ++pos)
          CHECK(truncated_homology_dim(c, pos, 6, FieldCtx::prime(101)) == 0);
      }
  }

  SECTION("the ends are not exact") {
    auto c = build_periodic_resolution(4, 1, 5);
    CHECK(truncated_homology_dim(c, 0, 6, FieldCtx::prime(101)) == 1);
  }

  SECTION("window and position guards") {
    auto c = build_periodic_resolution(4, 1, 5);
    CHECK_THROWS_AS(truncated_homology_dim(c, 1, 3, FieldCtx::prime(101)),
                    std::invalid_argument);
    CHECK_THROWS_AS(truncated_homology_dim(c, 7, 6, FieldCtx::prime(101)),
                    std::out_of_range);
  }
}

TEST_CASE("a zero map leaves the whole truncated module", "[homology]") {
  auto ring = product_ring(4);
  auto reg = ring.registry();
  ChainComplex c(ring, {FreeModuleMap::scalar(RatPoly::zero(reg))});
  CHECK(truncated_homology_dim(c, 1, 3, FieldCtx::prime(101)) == 35);
  CHECK(truncated_homology_dim(c, 0, 3, FieldCtx::rationals()) == 35);
}

TEST_CASE("cochain on a cyclic submodule", "[homology]") {
  auto ring = product_ring(4);
  auto reg = ring.registry();
  ModuleSpec sub{1, Monomial::var(4, 1)};  // multiples of z2
  auto f = FreeModuleMap::scalar(parse_poly("z2*z3*z4", reg));
  auto g = FreeModuleMap::scalar(parse_poly("z1", reg));
  ChainComplex c(ring, {f, g, f}, {sub, sub, sub, sub});
  REQUIRE(check_complex(c));

  // position 1: kernel of multiplication by z1 modulo the image of the
  // degree-3 product; one class in the window, at slice degree 3
  CHECK(truncated_homology_dim(c, 1, 6, FieldCtx::prime(101)) == 1);
  CHECK(truncated_homology_dim(c, 1, 6, FieldCtx::rationals()) == 1);

  // position 0: kernel of the first map alone, degrees 2 and 3 contribute
  CHECK(truncated_homology_dim(c, 0, 6, FieldCtx::prime(101)) == 5);
}

TEST_CASE("homology solver rejects malformed data", "[homology]") {
  auto ring = product_ring(4);
  auto reg = ring.registry();

  FreeModuleMap mixed;
  mixed.entries = {{parse_poly("z1", reg), parse_poly("z1*z2", reg)}};
  ChainComplex cm(ring, {mixed});
  CHECK_THROWS_AS(truncated_homology_dim(cm, 0, 6, FieldCtx::prime(101)),
                  std::invalid_argument);

  ModuleSpec sub{1, Monomial::var(4, 1)};
  ChainComplex esc(ring, {FreeModuleMap::scalar(parse_poly("z3", reg))},
                   {ModuleSpec{}, sub});
  CHECK_THROWS_AS(truncated_homology_dim(esc, 0, 6, FieldCtx::prime(101)),
                  std::logic_error);

  CHECK_THROWS_AS(
      ChainComplex(ring, {FreeModuleMap::scalar(parse_poly("z1", reg))},
                   {ModuleSpec{2, {}}, ModuleSpec{}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      ChainComplex(ring, {FreeModuleMap::scalar(parse_poly("z1", reg))},
                   {ModuleSpec{1, Monomial(std::vector<uint32_t>{1, 1, 1, 1})},
                    ModuleSpec{}}),
      std::invalid_argument);
}
