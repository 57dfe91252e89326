#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lgm/fields.hpp"

using namespace lgm;

TEST_CASE("rationals normalize to lowest terms with positive denominator", "[fields]") {
  Rat a = rat_frac(BigInt(6), BigInt(-4));
  CHECK(numerator(a) == -3);
  CHECK(denominator(a) == 2);
  CHECK(to_string(a) == "-3/2");

  Rat b = rat_from_string("2/4");
  CHECK(to_string(b) == "1/2");
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK(b + b == Rat(1));
  CHECK_THROWS_AS(rat_frac(BigInt(1), BigInt(0)), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact at scale", "[fields]") {
  // 1/1 + 1/2 + ... stays exact; harmonic partial sums have known values
  Rat h;
  for (int k = 1; k <= 10; ++k) h += rat_frac(BigInt(1), BigInt(k));
  CHECK(h == rat_frac(BigInt(7381), BigInt(2520)));
}

TEST_CASE("prime field arithmetic mod 101", "[fields]") {
  Zp a = Zp::of(-5, 101);
  CHECK(a.value() == 96);
  Zp b(7, 101);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == (96ull * 7) % 101);
  CHECK((a - a).value() == 0);
  CHECK((b / b).value() == 1);
  CHECK((b * b.inverse()).value() == 1);
  CHECK_THROWS_AS(Zp(0, 101).inverse(), std::domain_error);
  CHECK_THROWS_AS((Zp(1, 101) + Zp(1, 103)), std::invalid_argument);

  // every nonzero element of Z/101 is invertible
  for (uint64_t v = 1; v < 101; ++v) {
    CHECK((Zp(v, 101) * Zp(v, 101).inverse()).value() == 1);
  }
}

TEST_CASE("unspecified-modulus zero absorbs into a field", "[fields]") {
  Zp z;  // accumulator zero
  Zp a(42, 101);
  CHECK((z + a) == a);
  CHECK((a + z) == a);
  CHECK(is_zero(z * a));
  CHECK((z * a).modulus() == 101);
}

TEST_CASE("primality checks and field contexts", "[fields]") {
  CHECK(is_prime(2));
  CHECK(is_prime(101));
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(FieldCtx::prime(100), std::invalid_argument);
  CHECK(FieldCtx::prime(101).p == 101);
  CHECK(FieldCtx::rationals().rational());
}

TEST_CASE("rational reduction mod p", "[fields]") {
  FieldCtx ctx = FieldCtx::prime(101);
  Zp x = FieldIO<Zp>::from_rat(rat_frac(BigInt(1), BigInt(2)), ctx);
  CHECK((x * Zp(2, 101)).value() == 1);
  CHECK_THROWS_AS(FieldIO<Zp>::from_rat(rat_frac(BigInt(1), BigInt(101)), ctx),
                  std::domain_error);
  CHECK(FieldIO<Zp>::from_rat(Rat(-1), ctx).value() == 100);
}
