#pragma once

// Exact number-theoretic primitives and the ExactScalar algebra
//   r * sqrt(s) * exp(2 pi i u),   r > 0 rational, s squarefree, u in [0, 1).
// Every multiplier and cusp constant in the library is an ExactScalar, so
// identities between them are decided by comparing normal forms.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mockcong/error.hpp"

namespace mockcong {

using Integer = mpz_class;
using Rational = mpq_class;

// ---- integer helpers -------------------------------------------------------

/// Representative of x mod m in [0, m); m > 0.
std::int64_t floor_mod(std::int64_t x, std::int64_t m);
/// Inverse of x mod m; throws InvalidArgument when gcd(x, m) != 1.
std::int64_t inverse_mod(std::int64_t x, std::int64_t m);
bool is_prime(std::int64_t n);
/// Distinct prime divisors in increasing order.
std::vector<std::int64_t> prime_divisors(std::int64_t n);
/// Largest power of p dividing n, and n with that power removed.
std::pair<std::int64_t, std::int64_t> split_prime_power(std::int64_t n, std::int64_t p);

/// Reduces x mod 1 into [0, 1).
Rational frac(const Rational& x);

// ---- Dedekind sums, symbols, CRT ------------------------------------------

/// s(d, c) = sum_{r=1}^{c-1} (r/c - floor(r/c) - 1/2)(dr/c - floor(dr/c) - 1/2), c >= 1.
Rational dedekind_sum(std::int64_t d, std::int64_t c);

/// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(std::int64_t a, std::int64_t n);

struct Congruence {
  std::int64_t residue;
  std::int64_t modulus;
};

/// Unique x in [0, prod m_i) with x = r_i (mod m_i); moduli pairwise coprime.
std::int64_t crt(std::span<const Congruence> system);

// ---- ExactScalar -----------------------------------------------------------

class ExactScalar {
 public:
  /// The value 1.
  ExactScalar();
  /// r * sqrt(s) * e(u); r > 0, s >= 1. Normalizes s to squarefree and u into [0, 1).
  ExactScalar(Rational r, std::uint64_t s, Rational u);

  static ExactScalar one() { return {}; }
  /// exp(2 pi i u)
  static ExactScalar root_of_unity(const Rational& u);
  /// Any nonzero rational; the sign moves into the phase.
  static ExactScalar from_rational(const Rational& x);
  /// sqrt(x) for rational x > 0.
  static ExactScalar sqrt(const Rational& x);

  const Rational& magnitude() const { return r_; }
  std::uint64_t radicand() const { return s_; }
  const Rational& phase() const { return u_; }

  bool is_one() const { return r_ == 1 && s_ == 1 && u_ == 0; }
  bool is_root_of_unity() const { return r_ == 1 && s_ == 1; }

  ExactScalar inverse() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
  ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }
  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.r_ == y.r_ && x.s_ == y.s_ && x.u_ == y.u_;
  }

 private:
  Rational r_;
  std::uint64_t s_;
  Rational u_;
};

ExactScalar scalar_mul(const ExactScalar& x, const ExactScalar& y);
/// x^e for any integer e (negative powers invert).
ExactScalar scalar_pow(const ExactScalar& x, std::int64_t e);

/// 1 for d = 1 (mod 4), i for d = 3 (mod 4); d odd.
ExactScalar epsilon_d(std::int64_t d);

}  // namespace mockcong
