#include "mockcong/arith.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace mockcong {

namespace {

Integer from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  Integer out = (hi << 64) + lo;
  return negative ? Integer(-out) : out;
}

Rational rat(std::int64_t n, std::int64_t d = 1) {
  Rational x(Integer(static_cast<long>(n)), Integer(static_cast<long>(d)));
  x.canonicalize();
  return x;
}

}  // namespace

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t x, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r0 = m, r1 = floor_mod(x, m);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(x) + " is not invertible mod " + std::to_string(m));
  }
  return floor_mod(s0, m);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  n = n < 0 ? -n : n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<std::int64_t, std::int64_t> split_prime_power(std::int64_t n, std::int64_t p) {
  std::int64_t power = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    power *= p;
  }
  return {power, n};
}

Rational frac(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rational(fl);
}

Rational dedekind_sum(std::int64_t d, std::int64_t c) {
  if (c < 1) throw Error(ErrorCode::InvalidArgument, "dedekind_sum needs c >= 1");
  // Each term is (2r - c)(2x_r - c) / (4c^2) with x_r = dr mod c.
  const std::int64_t dm = floor_mod(d, c);
  __int128 total = 0;
  std::int64_t x = 0;
  for (std::int64_t r = 1; r < c; ++r) {
    x += dm;
    if (x >= c) x -= c;
    total += static_cast<__int128>(2 * r - c) * (2 * x - c);
  }
  Rational out(from_int128(total), Integer(4) * Integer(static_cast<long>(c)) * Integer(static_cast<long>(c)));
  out.canonicalize();
  return out;
}

int jacobi(std::int64_t a, std::int64_t n) {
  if (n < 1 || n % 2 == 0) throw Error(ErrorCode::InvalidArgument, "jacobi needs odd n >= 1");
  a = floor_mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::int64_t crt(std::span<const Congruence> system) {
  std::int64_t x = 0, modulus = 1;
  for (const auto& [r, m] : system) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "moduli must be positive");
    if (std::gcd(modulus, m) != 1) {
      throw Error(ErrorCode::NonCoprimeModuli, std::to_string(modulus) + " and " + std::to_string(m));
    }
    // x + modulus * k = r (mod m)
    const std::int64_t k = static_cast<std::int64_t>(
        static_cast<__int128>(floor_mod(r - x, m)) * inverse_mod(modulus, m) % m);
    x += modulus * k;
    modulus *= m;
    x = floor_mod(x, modulus);
  }
  return x;
}

// ---- ExactScalar -----------------------------------------------------------

ExactScalar::ExactScalar() : r_(1), s_(1), u_(0) {}

ExactScalar::ExactScalar(Rational r, std::uint64_t s, Rational u) : r_(std::move(r)), s_(s), u_(frac(u)) {
  r_.canonicalize();
  if (sgn(r_) <= 0) throw Error(ErrorCode::InvalidArgument, "magnitude must be positive");
  if (s_ == 0) throw Error(ErrorCode::InvalidArgument, "radicand must be positive");
  // pull square factors of s into r
  std::uint64_t square_root_part = 1, rest = 1, n = s_;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (std::uint64_t i = 0; i < e / 2; ++i) square_root_part *= p;
    if (e % 2 == 1) rest *= p;
  }
  rest *= n;
  s_ = rest;
  r_ *= Rational(static_cast<unsigned long>(square_root_part));
}

ExactScalar ExactScalar::root_of_unity(const Rational& u) { return ExactScalar(Rational(1), 1, u); }

ExactScalar ExactScalar::from_rational(const Rational& x) {
  if (sgn(x) == 0) throw Error(ErrorCode::InvalidArgument, "zero has no ExactScalar form");
  return ExactScalar(abs(x), 1, sgn(x) < 0 ? Rational(1, 2) : Rational(0));
}

ExactScalar ExactScalar::sqrt(const Rational& x) {
  if (sgn(x) <= 0) throw Error(ErrorCode::InvalidArgument, "sqrt needs a positive rational");
  // sqrt(p/q) = sqrt(pq) / q
  const Integer pq = x.get_num() * x.get_den();
  if (!pq.fits_ulong_p()) throw Error(ErrorCode::InvalidArgument, "radicand too large");
  return ExactScalar(Rational(1) / Rational(x.get_den()), pq.get_ui(), Rational(0));
}

ExactScalar ExactScalar::inverse() const {
  // 1 / (r sqrt(s)) = sqrt(s) / (r s)
  return ExactScalar(Rational(1) / (r_ * Rational(static_cast<unsigned long>(s_))), s_, -u_);
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
  const std::uint64_t g = std::gcd(x.s_, y.s_);
  // sqrt(s1 s2) = g sqrt((s1/g)(s2/g)), and the cofactors are coprime squarefree
  return ExactScalar(x.r_ * y.r_ * Rational(static_cast<unsigned long>(g)), (x.s_ / g) * (y.s_ / g), x.u_ + y.u_);
}

std::complex<double> ExactScalar::to_complex() const {
  const double mag = r_.get_d() * std::sqrt(static_cast<double>(s_));
  const double angle = 2.0 * std::numbers::pi * u_.get_d();
  return std::polar(mag, angle);
}

std::string ExactScalar::to_string() const {
  std::ostringstream os;
  os << r_;
  if (s_ != 1) os << "*sqrt(" << s_ << ")";
  if (u_ != 0) os << "*e(" << u_ << ")";
  return os.str();
}

ExactScalar scalar_mul(const ExactScalar& x, const ExactScalar& y) { return x * y; }

ExactScalar scalar_pow(const ExactScalar& x, std::int64_t e) {
  if (e < 0) return scalar_pow(x.inverse(), -e);
  ExactScalar result;
  ExactScalar base = x;
  auto n = static_cast<std::uint64_t>(e);
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

ExactScalar epsilon_d(std::int64_t d) {
  if (d % 2 == 0) throw Error(ErrorCode::EvenInput, "epsilon_d needs odd d, got " + std::to_string(d));
  return floor_mod(d, 4) == 1 ? ExactScalar::one() : ExactScalar::root_of_unity(rat(1, 4));
}

}  // namespace mockcong
