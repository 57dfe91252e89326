#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lgm/parse.hpp"
#include "lgm/polynomial.hpp"

using namespace lgm;
using lgmtest::bounded;

namespace {

RegistryPtr lg3_registry() {
  return VarRegistry::make({"x1", "x2", "x3", "x4", "y1", "t1", "t2"});
}

// The quartic hypersurface (y1+t1*x4)(y1+t2*x3) = x1*x2*x3*x4*y1, written as
// defining polynomial with the product first.
RatPoly lg3_poly(const RegistryPtr& reg) {
  return parse_poly("(y1+t1*x4)*(y1+t2*x3) - x1*x2*x3*x4*y1", reg);
}

}  // namespace

TEST_CASE("partial derivatives of the quartic hypersurface", "[poly]") {
  auto reg = lg3_registry();
  RatPoly p = lg3_poly(reg);

  CHECK(p.derivative(reg->index_checked("x1")) == parse_poly("-x2*x3*x4*y1", reg));
  CHECK(p.derivative(reg->index_checked("x2")) == parse_poly("-x1*x3*x4*y1", reg));
  CHECK(p.derivative(reg->index_checked("x3")) ==
        parse_poly("-x1*x2*x4*y1 + t2*y1 + t1*t2*x4", reg));
  CHECK(p.derivative(reg->index_checked("x4")) ==
        parse_poly("-x1*x2*x3*y1 + t1*y1 + t1*t2*x3", reg));
  CHECK(p.derivative(reg->index_checked("y1")) ==
        parse_poly("-x1*x2*x3*x4 + 2*y1 + t1*x4 + t2*x3", reg));
}

TEST_CASE("evaluation on and off the singular locus", "[poly]") {
  auto reg = lg3_registry();
  RatPoly p = lg3_poly(reg);

  // (0,0,1,1,-1) lies on the component x1=x2=0, y1+x3=0, y1+x4=0:
  // the polynomial and every partial vanish there.
  std::map<std::string, Rat> sing{{"x1", Rat(0)}, {"x2", Rat(0)}, {"x3", Rat(1)},
                                  {"x4", Rat(1)}, {"y1", Rat(-1)}, {"t1", Rat(1)},
                                  {"t2", Rat(1)}};
  CHECK(is_zero(p.evaluate(sing)));
  CHECK(is_zero(p.derivative(reg->index_checked("x3")).evaluate(sing)));
  for (auto v : {"x1", "x2", "x3", "x4", "y1"})
    CHECK(is_zero(p.derivative(reg->index_checked(v)).evaluate(sing)));

  // (1, 9/2, 1, 1, 2) is on the hypersurface but off both components.
  std::map<std::string, Rat> smooth{{"x1", Rat(1)}, {"x2", rat_frac(BigInt(9), BigInt(2))},
                                    {"x3", Rat(1)}, {"x4", Rat(1)}, {"y1", Rat(2)},
                                    {"t1", Rat(1)}, {"t2", Rat(1)}};
  CHECK(is_zero(p.evaluate(smooth)));
  CHECK(p.derivative(reg->index_checked("y1")).evaluate(smooth) ==
        rat_frac(BigInt(3), BigInt(2)));

  std::map<std::string, Rat> missing{{"x1", Rat(0)}};
  CHECK_THROWS_AS(p.evaluate(missing), std::invalid_argument);
}

TEST_CASE("substitution: specialization and renaming", "[poly]") {
  auto reg = lg3_registry();
  RatPoly p = lg3_poly(reg);

  SECTION("identity assignment returns the polynomial unchanged") {
    CHECK(substitute(p, reg, {}) == p);
  }

  SECTION("t1=t2=1 with x3->w, x4->z gives the symmetric quartic") {
    auto target = VarRegistry::make({"x1", "x2", "y1", "w", "z"});
    std::map<std::string, RatPoly> images{
        {"t1", RatPoly::constant(target, Rat(1))},
        {"t2", RatPoly::constant(target, Rat(1))},
        {"x3", parse_poly("w", target)},
        {"x4", parse_poly("z", target)}};
    RatPoly q = substitute(p, target, images);
    CHECK(q == parse_poly("(y1+z)*(y1+w) - x1*x2*w*z*y1", target));
  }
}

TEST_CASE("substitution kills the syzygy relations under the cone lift", "[poly]") {
  auto reg = VarRegistry::make({"x", "y", "w", "b0", "b1"});
  auto target = VarRegistry::make({"z", "u"});
  std::map<std::string, RatPoly> lift{
      {"x", parse_poly("u", target)},      {"y", parse_poly("z*u", target)},
      {"w", parse_poly("z^2*u", target)},  {"b0", parse_poly("u^2", target)},
      {"b1", parse_poly("z*u^2", target)}};
  RatPoly r1 = parse_poly("b0*y - b1*x", reg);
  RatPoly r2 = parse_poly("b0*w - b1*y", reg);
  CHECK(substitute(r1, target, lift).is_zero_poly());
  CHECK(substitute(r2, target, lift).is_zero_poly());
}

TEST_CASE("homogenization pads every term up to total degree", "[poly]") {
  auto reg = VarRegistry::make({"y1", "z1", "z2", "w1", "w2"});
  RatPoly q = parse_poly("(y1+w1*w2)*(y1+z1*z2)", reg);
  RatPoly h = homogenize(q, "y2");
  auto ext = h.registry();
  REQUIRE(ext->has("y2"));
  CHECK(h == parse_poly("(y1*y2+w1*w2)*(y1*y2+z1*z2)", ext));
  CHECK(h.is_homogeneous());
  CHECK_THROWS_AS(homogenize(q, "y1"), std::invalid_argument);

  // dehomogenize back: y2 -> 1
  std::map<std::string, RatPoly> back{{"y2", RatPoly::constant(reg, Rat(1))}};
  CHECK(substitute(h, reg, back) == q);
}

TEST_CASE("degrees, homogeneity with parameter support", "[poly]") {
  auto reg = lg3_registry();
  RatPoly p = lg3_poly(reg);
  CHECK(p.total_degree() == 5);  // x1*x2*x3*x4*y1
  CHECK(RatPoly::zero(reg).total_degree() == -1);
  CHECK_FALSE(p.is_homogeneous());

  // the pencil member (y1*y2 + t1*w1*w2)(y1*y2 + t2*z1*z2)*y2 is homogeneous
  // once t1, t2 are treated as parameters
  auto preg = VarRegistry::make({"y1", "y2", "z1", "z2", "w1", "w2", "t1", "t2"});
  RatPoly f = parse_poly("(y1*y2 + t1*w1*w2)*(y1*y2 + t2*z1*z2)*y2", preg);
  std::vector<size_t> geom{0, 1, 2, 3, 4, 5};
  CHECK(f.is_homogeneous(geom));
  CHECK_FALSE(f.is_homogeneous());
}

TEST_CASE("ring axioms hold for random polynomials", "[poly][property]") {
  std::mt19937_64 rng(20260301);
  auto reg = lgmtest::test_registry(4);

  SECTION("over the rationals") {
    for (int it = 0; it < 200; ++it) {
      RatPoly a = lgmtest::random_rat_poly(rng, reg, 4, 6);
      RatPoly b = lgmtest::random_rat_poly(rng, reg, 4, 6);
      RatPoly c = lgmtest::random_rat_poly(rng, reg, 4, 6);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero_poly());
      CHECK(a * RatPoly::constant(reg, Rat(1)) == a);
      CHECK((a * RatPoly::zero(reg)).is_zero_poly());
    }
  }

  SECTION("over Z/101") {
    const uint32_t p = 101;
    for (int it = 0; it < 200; ++it) {
      ZpPoly a = lgmtest::random_zp_poly(rng, reg, 4, 6, p);
      ZpPoly b = lgmtest::random_zp_poly(rng, reg, 4, 6, p);
      ZpPoly c = lgmtest::random_zp_poly(rng, reg, 4, 6, p);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero_poly());
      CHECK(a * ZpPoly::constant(reg, Zp(1, p)) == a);
    }
  }
}

TEST_CASE("mixed partial derivatives commute", "[poly][property]") {
  std::mt19937_64 rng(20260302);
  auto reg = lgmtest::test_registry(5);
  for (int it = 0; it < 300; ++it) {
    RatPoly a = lgmtest::random_rat_poly(rng, reg, 6, 8);
    size_t i = bounded(rng, 5), j = bounded(rng, 5);
    CHECK(a.derivative(i).derivative(j) == a.derivative(j).derivative(i));
  }
}

TEST_CASE("substitute then evaluate equals evaluate composed", "[poly][property]") {
  std::mt19937_64 rng(20260303);
  auto src = lgmtest::test_registry(3);
  auto dst = VarRegistry::make({"s", "t"});
  for (int it = 0; it < 100; ++it) {
    RatPoly p = lgmtest::random_rat_poly(rng, src, 4, 5);
    std::map<std::string, RatPoly> images;
    for (size_t i = 0; i < 3; ++i)
      images["v" + std::to_string(i + 1)] = lgmtest::random_rat_poly(rng, dst, 3, 4);
    std::map<std::string, Rat> pt{{"s", Rat(lgmtest::signed_range(rng, -5, 5))},
                                  {"t", Rat(lgmtest::signed_range(rng, -5, 5))}};
    std::map<std::string, Rat> lifted;
    for (auto& [name, img] : images) lifted[name] = img.evaluate(pt);
    CHECK(substitute(p, dst, images).evaluate(pt) == p.evaluate(lifted));
  }
}

TEST_CASE("term-level helpers agree with full products", "[poly]") {
  std::mt19937_64 rng(20260304);
  auto reg = lgmtest::test_registry(3);
  for (int it = 0; it < 50; ++it) {
    RatPoly a = lgmtest::random_rat_poly(rng, reg, 4, 5);
    Monomial m = lgmtest::random_monomial(rng, 3, 3);
    Rat c(lgmtest::signed_range(rng, -4, 4));
    CHECK(a.times_term(m, c) == a * RatPoly::monomial(reg, m, c));
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("from_terms merges duplicates and prunes zeros", "[poly]") {
  auto reg = lgmtest::test_registry(2);
  Monomial m = Monomial::var(2, 0, 2);
  RatPoly p = RatPoly::from_terms(reg, {{m, Rat(2)}, {m, Rat(-2)}, {Monomial(2), Rat(0)}});
  CHECK(p.is_zero_poly());
}

TEST_CASE("transport rebuilds polynomials over wider registries", "[poly]") {
  auto small = VarRegistry::make({"a", "b"});
  auto wide = VarRegistry::make({"c", "a", "b", "d"});
  RatPoly p = parse_poly("a^2 - 3*b", small);
  RatPoly q = transport(p, wide);
  CHECK(q == parse_poly("a^2 - 3*b", wide));
  CHECK_THROWS_AS(transport(parse_poly("c", VarRegistry::make({"c"})), small),
                  std::invalid_argument);
}
