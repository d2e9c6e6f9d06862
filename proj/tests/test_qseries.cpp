#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mockcong/generators.hpp"
#include "mockcong/qseries.hpp"
#include "oracles.hpp"

using namespace mockcong;

namespace {

QSeries ints(Rational offset, std::vector<long> c) {
  QSeries::IntegerCoeffs v;
  for (long x : c) v.emplace_back(x);
  return QSeries(std::move(offset), std::move(v));
}

QSeries residues(std::uint64_t m, std::vector<std::uint64_t> c) { return QSeries(Rational(0), m, std::move(c)); }

std::vector<long> as_longs(const QSeries& s) {
  std::vector<long> out;
  for (std::size_t n = 0; n < s.prec(); ++n) out.push_back(s.slot(n).get_num().get_si());
  return out;
}

QSeries random_series(std::mt19937_64& rng, const CoefficientRing& ring, std::size_t prec) {
  switch (ring.kind()) {
    case CoefficientRing::Kind::Integer: {
      QSeries::IntegerCoeffs v;
      for (std::size_t i = 0; i < prec; ++i) v.emplace_back(static_cast<long>(rng() % 2001) - 1000);
      return QSeries(Rational(0), std::move(v));
    }
    case CoefficientRing::Kind::Rational: {
      QSeries::RationalCoeffs v;
      for (std::size_t i = 0; i < prec; ++i) {
        Rational x(static_cast<long>(rng() % 41) - 20, static_cast<long>(1 + rng() % 9));
        x.canonicalize();
        v.push_back(x);
      }
      return QSeries(Rational(0), std::move(v));
    }
    case CoefficientRing::Kind::IntegerMod: break;
  }
  QSeries::ResidueCoeffs v;
  for (std::size_t i = 0; i < prec; ++i) v.push_back(rng() % ring.modulus());
  return QSeries(Rational(0), ring.modulus(), std::move(v));
}

}  // namespace

TEST_CASE("rings") {
  CHECK_THROWS_AS(CoefficientRing::modulo(1), Error);
  CHECK_THROWS_AS(CoefficientRing::modulo(std::uint64_t{1} << 32), Error);
  CHECK(CoefficientRing::modulo(7).modulus() == 7);
}

TEST_CASE("monomial") {
  const auto a = monomial(Rational(-1, 24), CoefficientRing::integer(), 3);
  CHECK(a.offset() == Rational(-1, 24));
  CHECK(as_longs(a) == std::vector<long>{1, 0, 0});
  const auto b = monomial(Rational(0), CoefficientRing::modulo(3), 1);
  CHECK(b.residues()[0] == 1);
  const auto c = monomial(Rational(2, 3), CoefficientRing::rational(), 2);
  CHECK(c.offset() == Rational(2, 3));
  CHECK(c.prec() == 2);
}

TEST_CASE("add and sub") {
  CHECK(as_longs(ints(0, {1, 1}) + ints(0, {1, -1})) == std::vector<long>{2, 0});
  const auto s = ints(Rational(-1, 24), {1, 1}) + ints(Rational(23, 24), {1});
  CHECK(s.offset() == Rational(-1, 24));
  CHECK(as_longs(s) == std::vector<long>{1, 2});
  CHECK_THROWS_AS(ints(0, {1, 1}) + ints(Rational(1, 2), {1}), Error);
  CHECK(as_longs(ints(0, {3, 4, 5}) - ints(0, {1, 1, 1})) == std::vector<long>{2, 3, 4});
  CHECK_THROWS_AS(ints(0, {1}) + residues(3, {1}), Error);
}

TEST_CASE("mul small cases") {
  CHECK(as_longs(ints(0, {1, 1, 0}) * ints(0, {1, -1, 0})) == std::vector<long>{1, 0, -1});
  const auto p = ints(Rational(-1, 24), {1}) * ints(Rational(1, 24), {1});
  CHECK(p.offset() == 0);
  CHECK(as_longs(p) == std::vector<long>{1});
}

TEST_CASE("partition series times eta series is one") {
  const auto eta = eta_series(200);
  const auto part = eta_quotient(EtaQuotientSpec({{1, -1}}), 200);
  const auto one = eta * part;
  CHECK(one.offset() == 0);
  CHECK(one.slot(0) == 1);
  for (std::size_t n = 1; n < one.prec(); ++n) CHECK(one.slot_is_zero(n));
}

TEST_CASE("mul matches naive convolution in every ring") {
  std::mt19937_64 rng(3);
  for (const auto& ring : {CoefficientRing::integer(), CoefficientRing::rational(), CoefficientRing::modulo(7),
                           CoefficientRing::modulo(4294967291u)}) {
    for (const std::size_t prec : {1u, 2u, 17u, 64u, 150u}) {
      const auto a = random_series(rng, ring, prec);
      const auto b = random_series(rng, ring, prec);
      std::vector<mpq_class> ra, rb;
      for (std::size_t i = 0; i < prec; ++i) {
        ra.push_back(a.slot(i));
        rb.push_back(b.slot(i));
      }
      auto expected = oracle::convolve(ra, rb, prec);
      if (ring.is_modular()) {
        for (auto& x : expected) {
          mpz_class r;
          mpz_fdiv_r_ui(r.get_mpz_t(), x.get_num().get_mpz_t(), ring.modulus());
          x = r;
        }
      }
      const auto product = a * b;
      REQUIRE(product.prec() == prec);
      for (std::size_t i = 0; i < prec; ++i) CHECK(product.slot(i) == expected[i]);
      // the fast path must agree with schoolbook
      CHECK(mul(a, b, MulOptions{8}) == mul_schoolbook(a, b));
    }
  }
}

TEST_CASE("mul is commutative and associative") {
  std::mt19937_64 rng(9);
  const auto ring = CoefficientRing::modulo(1000003);
  const auto a = random_series(rng, ring, 90);
  const auto b = random_series(rng, ring, 90);
  const auto c = random_series(rng, ring, 90);
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("invert") {
  const auto g = invert(ints(0, {1, -1, 0, 0, 0}));
  CHECK(as_longs(g) == std::vector<long>{1, 1, 1, 1, 1});
  const auto h = invert(ints(Rational(1, 24), {1}));
  CHECK(h.offset() == Rational(-1, 24));
  const auto m = invert(residues(4, {1, 2, 0, 0}));
  CHECK(std::vector<std::uint64_t>(m.residues().begin(), m.residues().end()) == std::vector<std::uint64_t>{1, 2, 0, 0});
  CHECK_THROWS_AS(invert(residues(4, {2, 1})), Error);
  CHECK_THROWS_AS(invert(ints(0, {2, 1})), Error);
  std::mt19937_64 rng(1);
  auto r = random_series(rng, CoefficientRing::rational(), 40);
  if (r.slot(0) == 0) r = r + monomial(Rational(0), CoefficientRing::rational(), 40);
  const auto one = r * invert(r);
  CHECK(one.slot(0) == 1);
  for (std::size_t n = 1; n < 40; ++n) CHECK(one.slot_is_zero(n));
}

TEST_CASE("pow") {
  CHECK(as_longs(pow(ints(0, {1, 1, 0}), 2)) == std::vector<long>{1, 2, 1});
  const auto p = pow(eta_series(7), -1);
  CHECK(p.offset() == Rational(-1, 24));
  CHECK(as_longs(p) == std::vector<long>{1, 1, 2, 3, 5, 7, 11});
  const auto z = pow(ints(Rational(5, 7), {3, 2, 1}), 0);
  CHECK(z.offset() == 0);
  CHECK(as_longs(z) == std::vector<long>{1, 0, 0});
}

TEST_CASE("reduce_mod") {
  const auto r = reduce_mod(ints(0, {1, 3, 5}), 3);
  CHECK(std::vector<std::uint64_t>(r.residues().begin(), r.residues().end()) == std::vector<std::uint64_t>{1, 0, 2});
  CHECK(reduce_mod(ints(0, {-1}), 5).residues()[0] == 4);
  CHECK(reduce_mod(residues(6, {5, 4}), 3).residues()[1] == 1);
  CHECK_THROWS_AS(reduce_mod(residues(5, {1}), 3), Error);
  // reduction is a ring homomorphism
  std::mt19937_64 rng(2);
  const auto a = random_series(rng, CoefficientRing::integer(), 50);
  const auto b = random_series(rng, CoefficientRing::integer(), 50);
  CHECK(reduce_mod(a * b, 11) == reduce_mod(a, 11) * reduce_mod(b, 11));
}

TEST_CASE("extract_progression") {
  const auto part = eta_quotient(EtaQuotientSpec({{1, -1}}), 15);
  const auto e = extract_progression(part, 5, 4);
  CHECK(as_longs(e) == std::vector<long>{5, 30, 135});
  for (const long v : as_longs(e)) CHECK(v % 5 == 0);
  CHECK(extract_progression(part, 1, 0) == part);
  CHECK(extract_progression(mock_f(30), 3, 0).slot(0) == 1);
  CHECK_THROWS_AS(extract_progression(ints(0, {1, 2}), 5, 3), Error);
}

TEST_CASE("substitute_power") {
  CHECK(as_longs(substitute_power(ints(0, {1, 1}), 2)) == std::vector<long>{1, 0, 1, 0});
  const auto eta2 = substitute_power(eta_series(40), 2);
  CHECK(eta2.offset() == Rational(1, 12));
  const auto expected = oracle::euler_product(40);
  for (std::size_t n = 0; n < 80; ++n) CHECK(eta2.slot(n) == (n % 2 == 0 ? expected[n / 2] : 0));
  CHECK(substitute_power(monomial(Rational(-1, 24), CoefficientRing::integer(), 2), 5).offset() == Rational(-5, 24));
}

TEST_CASE("coefficient_at") {
  const auto a = ints(Rational(-1, 24), {1, 1});
  CHECK(coefficient_at(a, Rational(-1, 24)) == Rational(1));
  CHECK_FALSE(coefficient_at(a, Rational(0)).has_value());
  CHECK(coefficient_at(a, Rational(-25, 24)) == Rational(0));
  CHECK_THROWS_AS(coefficient_at(ints(0, {1, 1}), Rational(5)), Error);
}

TEST_CASE("truncate") {
  CHECK(as_longs(truncate(ints(0, {1, 2, 3}), 2)) == std::vector<long>{1, 2});
  CHECK_THROWS_AS(truncate(ints(0, {1}), 2), Error);
}
