#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mockcong/arith.hpp"
#include "oracles.hpp"

using namespace mockcong;

TEST_CASE("floor_mod and inverse_mod") {
  CHECK(floor_mod(-1, 5) == 4);
  CHECK(floor_mod(10, 5) == 0);
  CHECK(inverse_mod(24, 5) == 4);
  CHECK(inverse_mod(-1, 7) == 6);
  CHECK_THROWS_AS(inverse_mod(6, 9), Error);
}

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_divisors(360) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(prime_divisors(1).empty());
  const auto [power, rest] = split_prime_power(72, 2);
  CHECK(power == 8);
  CHECK(rest == 9);
}

TEST_CASE("dedekind_sum small values") {
  CHECK(dedekind_sum(7, 1) == 0);
  CHECK(dedekind_sum(-3, 1) == 0);
  CHECK(dedekind_sum(1, 3) == Rational(1, 18));
  CHECK(dedekind_sum(1, 2) == 0);
}

TEST_CASE("dedekind_sum agrees with the reciprocity oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const long c = 1 + static_cast<long>(rng() % 500);
    const long d = static_cast<long>(rng() % 2001) - 1000;
    if (std::gcd(d, c) != 1) continue;
    CAPTURE(d);
    CAPTURE(c);
    CHECK(dedekind_sum(d, c) == oracle::dedekind_reciprocity(d, c));
    CHECK(dedekind_sum(-d, c) == -dedekind_sum(d, c));
    // denominator divides 6c^2
    CHECK(mpz_divisible_p(Integer(6 * c * c).get_mpz_t(), dedekind_sum(d, c).get_den().get_mpz_t()));
  }
}

TEST_CASE("jacobi symbol") {
  CHECK(jacobi(2, 5) == -1);
  CHECK(jacobi(0, 3) == 0);
  for (std::int64_t n = 1; n < 60; n += 2) CHECK(jacobi(1, n) == 1);
  for (const long p : {3L, 5L, 7L, 11L, 13L, 29L, 31L}) {
    for (long a = -40; a <= 40; ++a) CHECK(jacobi(a, p) == oracle::legendre(a, p));
  }
  // multiplicative in the modulus
  CHECK(jacobi(2, 15) == jacobi(2, 3) * jacobi(2, 5));
  CHECK_THROWS_AS(jacobi(3, 8), Error);
}

TEST_CASE("crt") {
  const Congruence a[] = {{4, 5}, {1, 7}};
  CHECK(crt(a) == 29);
  const Congruence b[] = {{3, 8}};
  CHECK(crt(b) == 3);
  const Congruence c[] = {{0, 2}, {0, 3}};
  CHECK(crt(c) == 0);
  const Congruence bad[] = {{1, 4}, {1, 6}};
  CHECK_THROWS_AS(crt(bad), Error);
  // exhaustive check against direct search
  for (std::int64_t r = 0; r < 9; ++r) {
    for (std::int64_t s = 0; s < 5; ++s) {
      const Congruence sys[] = {{r, 9}, {s, 5}};
      const std::int64_t x = crt(sys);
      CHECK(x % 9 == r);
      CHECK(x % 5 == s);
      CHECK(x < 45);
    }
  }
}

TEST_CASE("ExactScalar normal form") {
  const ExactScalar x(Rational(3), 12, Rational(5, 4));
  CHECK(x.magnitude() == 6);
  CHECK(x.radicand() == 3);
  CHECK(x.phase() == Rational(1, 4));
  CHECK(ExactScalar::from_rational(Rational(-2)) == ExactScalar(Rational(2), 1, Rational(1, 2)));
  CHECK(ExactScalar::sqrt(Rational(1, 5)) == ExactScalar(Rational(1, 5), 5, Rational(0)));
}

TEST_CASE("scalar_mul") {
  const ExactScalar root2(Rational(1), 2, Rational(0));
  CHECK(scalar_mul(root2, root2) == ExactScalar(Rational(2), 1, Rational(0)));
  const ExactScalar i(Rational(1), 1, Rational(1, 4));
  CHECK(scalar_mul(i, i) == ExactScalar(Rational(1), 1, Rational(1, 2)));
  const ExactScalar x(Rational(1), 3, Rational(1, 8));
  const ExactScalar y(Rational(2), 6, Rational(7, 8));
  const ExactScalar product = scalar_mul(x, y);
  CHECK(product == ExactScalar(Rational(6), 2, Rational(0)));
  const auto numeric = x.to_complex() * y.to_complex();
  CHECK(std::abs(numeric - product.to_complex()) < 1e-12);
}

TEST_CASE("scalar_pow") {
  for (const std::uint64_t q : {2u, 5u, 7u, 13u}) {
    CHECK(scalar_pow(ExactScalar(Rational(1), q, Rational(0)), 2) == ExactScalar(Rational(q), 1, Rational(0)));
  }
  CHECK(scalar_pow(ExactScalar::root_of_unity(Rational(1, 24)), 24).is_one());
  const ExactScalar z(Rational(2, 3), 7, Rational(3, 10));
  CHECK(scalar_pow(z, -3) * scalar_pow(z, 3) == ExactScalar::one());
  CHECK(scalar_pow(z, 0).is_one());
}

TEST_CASE("ExactScalar inverse and complex value") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const ExactScalar z(Rational(1 + rng() % 9, 1 + rng() % 7), 1 + rng() % 30, Rational(rng() % 48, 48));
    CHECK((z * z.inverse()).is_one());
    CHECK(std::abs(z.to_complex() * z.inverse().to_complex() - 1.0) < 1e-12);
  }
}

TEST_CASE("epsilon_d") {
  CHECK(epsilon_d(1).is_one());
  CHECK(epsilon_d(5).is_one());
  CHECK(epsilon_d(3) == ExactScalar::root_of_unity(Rational(1, 4)));
  CHECK(epsilon_d(-1) == ExactScalar::root_of_unity(Rational(1, 4)));
  CHECK_THROWS_AS(epsilon_d(4), Error);
}

TEST_CASE("frac") {
  CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
  CHECK(frac(Rational(7, 2)) == Rational(1, 2));
}
