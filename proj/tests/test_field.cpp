#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "preop/field.hpp"

using preop::Fp;
using preop::Rational;

namespace {

Rational q(long long n, long long d = 1) { return Rational::Config{}.from_fraction(n, d); }

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(2, 3) * q(3, 4) == q(1, 2));
  CHECK(q(7, -3) == q(-7, 3));  // canonical: positive denominator
  CHECK(q(4, 8) == q(1, 2));    // canonical: reduced
  CHECK(q(3).inverse() == q(1, 3));
  CHECK(q(2, 3).inverse() == q(3, 2));
  CHECK(q(1).inverse() == q(1));
  CHECK((q(5) + q(0)) == q(5));
  CHECK((q(5) * q(1)) == q(5));
  CHECK_THROWS_AS(q(0).inverse(), preop::division_by_zero);
}

TEST_CASE("rational parsing") {
  Rational::Config cfg;
  CHECK(cfg.parse("5/6") == q(5, 6));
  CHECK(cfg.parse("-14") == q(-14));
  CHECK(cfg.parse("123456789012345678901234567890/2") ==
        cfg.parse("61728394506172839450617283945"));
  CHECK_THROWS_AS(cfg.parse("x"), preop::load_error);
}

TEST_CASE("prime field arithmetic") {
  Fp::Config f7(7);
  CHECK(f7.from_int(5) + f7.from_int(4) == f7.from_int(2));
  CHECK(f7.from_int(3).inverse() == f7.from_int(5));  // 3*5 = 15 = 1 mod 7
  Fp::Config f5(5);
  CHECK(f5.from_int(3) * f5.from_int(4) == f5.from_int(2));
  CHECK(f5.from_int(-1) == f5.from_int(4));
  CHECK(f5.from_fraction(1, 2) == f5.from_int(3));  // 2*3 = 1 mod 5
  CHECK(f5.parse("7/2") == f5.from_int(1));
  CHECK_THROWS_AS(f5.zero().inverse(), preop::division_by_zero);
}

TEST_CASE("modulus validation and mixing") {
  CHECK_THROWS_AS(Fp::Config(6), preop::config_error);
  CHECK_THROWS_AS(Fp::Config(1), preop::config_error);
  CHECK_NOTHROW(Fp::Config(10007));
  Fp a = Fp::Config(7).from_int(3);
  Fp b = Fp::Config(5).from_int(3);
  CHECK_THROWS_AS(a + b, preop::config_error);
  CHECK_THROWS_AS(a * b, preop::config_error);
}

TEMPLATE_TEST_CASE("field axioms hold exactly on seeded random values", "", Rational, Fp) {
  auto cfg = [] {
    if constexpr (std::is_same_v<TestType, Rational>)
      return Rational::Config{};
    else
      return Fp::Config(10007);
  }();
  std::mt19937_64 rng(20240901);
  auto pick = [&] {
    long long n = static_cast<long long>(rng() % 41) - 20;
    if constexpr (std::is_same_v<TestType, Rational>) {
      long long d = 1 + static_cast<long long>(rng() % 9);
      return cfg.from_fraction(n, d);
    } else {
      return cfg.from_int(n);
    }
  };
  for (int trial = 0; trial < 300; ++trial) {
    TestType a = pick(), b = pick(), c = pick();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == cfg.zero());
    if (!a.is_zero()) CHECK(a * a.inverse() == cfg.one());
  }
}
