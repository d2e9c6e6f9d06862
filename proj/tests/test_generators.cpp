#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "mockcong/generators.hpp"
#include "oracles.hpp"

using namespace mockcong;

namespace {

std::vector<long> slots(const QSeries& s, std::size_t count) {
  std::vector<long> out;
  for (std::size_t n = 0; n < count; ++n) out.push_back(s.slot(n).get_num().get_si());
  return out;
}

}  // namespace

TEST_CASE("eta-quotient specs") {
  const EtaQuotientSpec spec({{4, -2}, {1, -4}, {2, 5}});
  CHECK(spec.factors().front().delta == 1);
  CHECK(spec.b() == -2);
  CHECK(spec.weight_twice() == -1);
  CHECK(spec.level() == 4);
  CHECK(spec.to_string() == "1^-4,2^5,4^-2");
  CHECK_THROWS_AS(EtaQuotientSpec({{1, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(EtaQuotientSpec({{0, 1}}), Error);
  CHECK_THROWS_AS(EtaQuotientSpec({{2, 0}}), Error);
}

TEST_CASE("eta-quotient grammar") {
  CHECK(parse_eta_quotient("1^-4,2^5,4^-2") == EtaQuotientSpec({{1, -4}, {2, 5}, {4, -2}}));
  CHECK(parse_eta_quotient("5^-1").b() == -5);
  CHECK(parse_eta_quotient(" 2^3 , 1^-1 ").to_string() == "1^-1,2^3");
  for (const char* bad : {"", "1^", "^2", "1^0", "0^1", "1^2,1^3", "a^1", "1^-", "1^2,", "1**2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_eta_quotient(bad), Error);
  }
  // round trip through the canonical text
  for (const auto& entry : catalog()) {
    if (const auto* spec = std::get_if<EtaQuotientSpec>(&entry.spec)) {
      CHECK(parse_eta_quotient(spec->to_string()) == *spec);
    }
  }
}

TEST_CASE("catalog") {
  std::set<std::string> names;
  for (const auto& entry : catalog()) CHECK(names.insert(entry.name).second);
  const auto b_of = [](const char* name) { return std::get<EtaQuotientSpec>(find_series(name).spec).b(); };
  CHECK(b_of("cphi2") == -2);
  CHECK(b_of("core4") == 15);
  CHECK(b_of("crank_diff") == -1);
  CHECK(b_of("cubic") == -3);
  CHECK(b_of("eta5inv") == -5);
  CHECK(b_of("multipartition_7") == -7);
  CHECK_THROWS_AS(find_series("nosuch"), Error);
  CHECK_THROWS_AS(find_series("multipartition_0"), Error);
}

TEST_CASE("eta_series") {
  const auto eta = eta_series(120);
  CHECK(slots(eta, 6) == std::vector<long>{1, -1, -1, 0, 0, 1});
  CHECK(coefficient_at(eta, Rational(1, 24)) == Rational(1));
  const auto expected = oracle::euler_product(120);
  for (std::size_t n = 0; n < 120; ++n) CHECK(eta.slot(n) == expected[n]);
  std::set<std::size_t> pentagonal;
  for (long k = -20; k <= 20; ++k) pentagonal.insert(static_cast<std::size_t>(k * (3 * k + 1) / 2));
  for (std::size_t n = 0; n < 120; ++n) {
    if (!pentagonal.count(n)) CHECK(eta.slot_is_zero(n));
  }
}

TEST_CASE("eta_quotient expansions") {
  const auto part = eta_quotient(EtaQuotientSpec({{1, -1}}), 400);
  CHECK(part.offset() == Rational(-1, 24));
  CHECK(slots(part, 6) == std::vector<long>{1, 1, 2, 3, 5, 7});
  const auto p = oracle::partitions(400);
  for (std::size_t n = 0; n < 400; ++n) CHECK(part.slot(n) == p[n]);

  const auto cubic = build_series(find_series("cubic"), 10);
  CHECK(cubic.slot(3) == 4);

  const auto crank = build_series(find_series("crank_diff"), 60);
  CHECK(crank.offset() == Rational(-1, 24));
  // direct product: eta^3 / eta(2z)^2 from the independent Euler product
  const auto e1 = oracle::euler_product(60);
  std::vector<mpq_class> eta1(e1.begin(), e1.end());
  std::vector<mpq_class> eta2(60, 0);
  for (std::size_t n = 0; 2 * n < 60; ++n) eta2[2 * n] = e1[n];
  std::vector<mpq_class> inv2(60, 0);  // 1 / eta2-product by recurrence
  inv2[0] = 1;
  for (std::size_t n = 1; n < 60; ++n) {
    for (std::size_t k = 1; k <= n; ++k) inv2[n] -= eta2[k] * inv2[n - k];
  }
  auto prod = oracle::convolve(oracle::convolve(eta1, eta1, 60), eta1, 60);
  prod = oracle::convolve(oracle::convolve(prod, inv2, 60), inv2, 60);
  for (std::size_t n = 0; n < 60; ++n) CHECK(crank.slot(n) == prod[n]);
}

TEST_CASE("eta_quotient agrees across rings") {
  const auto spec = parse_eta_quotient("1^-4,2^5,4^-2");
  const auto z = eta_quotient(spec, 300);
  CHECK(reduce_mod(z, 7) == eta_quotient(spec, 300, CoefficientRing::modulo(7)));
  const auto q = eta_quotient(spec, 50, CoefficientRing::rational());
  for (std::size_t n = 0; n < 50; ++n) CHECK(q.slot(n) == z.slot(n));
}

TEST_CASE("mock_f") {
  const auto f = mock_f(2001);
  CHECK(f.slot(0) == 1);
  CHECK(slots(f, 8) == std::vector<long>{1, 1, -2, 3, -3, 3, -5, 7});
  for (std::int64_t n = 0; n <= 30; ++n) CHECK(f.slot(static_cast<std::size_t>(n)) == rank_diff_oracle(n));
  const auto p = oracle::partitions(2001);
  for (std::size_t n = 0; n < 2001; ++n) {
    const mpz_class diff = f.slot(n).get_num() - p[n];
    CHECK(mpz_even_p(diff.get_mpz_t()));
  }
  CHECK(reduce_mod(f, 3) == mock_f(2001, CoefficientRing::modulo(3)));
}

TEST_CASE("mock_omega") {
  const auto w = mock_omega(2001);
  CHECK(w.slot(0) == 1);
  CHECK(w.slot(4) == 6);
  for (std::int64_t n = 0; n <= 30; ++n) CHECK(w.slot(static_cast<std::size_t>(n)) == omega_partition_oracle(n));
  std::set<std::size_t> special;
  for (long j = -40; j <= 40; ++j) {
    if (6 * j * j + 4 * j < 2001) special.insert(static_cast<std::size_t>(6 * j * j + 4 * j));
  }
  for (std::size_t n = 0; n < 2001; ++n) {
    CHECK((mpz_odd_p(w.slot(n).get_num().get_mpz_t()) != 0) == (special.count(n) > 0));
  }
}

TEST_CASE("theta series") {
  const auto g1 = theta_g(1, 40);
  CHECK(coefficient_at(g1, Rational(1, 24)) == Rational(-1, 6));
  const auto g0 = theta_g(0, 40);
  const auto g2 = theta_g(2, 40);
  CHECK(theta_exponent_scale(0) == 2);
  // g0 at exponent 1/6 sits at 1/3 in the doubled variable
  CHECK(coefficient_at(g0, Rational(1, 6) * theta_exponent_scale(0)) == Rational(1, 3));
  const auto sum = g0 + g2;
  for (long n = -3; n <= 3; ++n) {
    const auto slot = static_cast<std::size_t>(3 * n * n + 2 * n);
    const Rational term = Rational(n) + Rational(1, 3);
    CHECK(sum.slot(slot) == (n % 2 == 0 ? 2 * term : Rational(0)));
  }
  CHECK_THROWS_AS(theta_g(3, 5), Error);
}

TEST_CASE("oracles") {
  CHECK(rank_diff_oracle(0) == 1);
  CHECK(rank_diff_oracle(4) == mock_f(5).slot(4));
  CHECK(rank_diff_oracle(5) == mock_f(6).slot(5));
  CHECK(omega_partition_oracle(4) == 6);
  CHECK(omega_partition_oracle(0) == 1);
  CHECK(omega_partition_oracle(10) == mock_omega(11).slot(10));
  const auto p = oracle::partitions(61);
  for (std::int64_t n = 0; n <= 60; ++n) CHECK(partition_count_oracle(n) == p[static_cast<std::size_t>(n)]);
  CHECK_THROWS_AS(partition_count_oracle(61), Error);
  CHECK_THROWS_AS(rank_diff_oracle(-1), Error);
}
