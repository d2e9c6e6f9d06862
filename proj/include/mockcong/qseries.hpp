#pragma once

// Truncated formal power series  q^offset * sum_{n<prec} c_n q^n  over
// Z, Q or Z/mZ. Exponent steps above the offset are integral.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "mockcong/error.hpp"

namespace mockcong {

using Integer = mpz_class;
using Rational = mpq_class;

class CoefficientRing {
 public:
  enum class Kind { Integer, Rational, IntegerMod };

  static CoefficientRing integer() { return CoefficientRing(Kind::Integer, 0); }
  static CoefficientRing rational() { return CoefficientRing(Kind::Rational, 0); }
  /// Z/mZ; m must lie in [2, 2^32).
  static CoefficientRing modulo(std::uint64_t m);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_modular() const { return kind_ == Kind::IntegerMod; }

  std::string to_string() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  CoefficientRing(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

/// Tuning for mul(); the fast path is Karatsuba and must agree with schoolbook.
struct MulOptions {
  std::size_t fast_threshold = std::size_t{1} << 14;
};

class QSeries {
 public:
  using IntegerCoeffs = std::vector<Integer>;
  using RationalCoeffs = std::vector<Rational>;
  using ResidueCoeffs = std::vector<std::uint64_t>;
  using Storage = std::variant<IntegerCoeffs, RationalCoeffs, ResidueCoeffs>;

  /// Zero series of the given precision.
  QSeries(Rational offset, CoefficientRing ring, std::size_t prec);
  QSeries(Rational offset, IntegerCoeffs coeffs);
  QSeries(Rational offset, RationalCoeffs coeffs);
  /// Residues are reduced into [0, m) on construction.
  QSeries(Rational offset, std::uint64_t modulus, ResidueCoeffs coeffs);

  const Rational& offset() const { return offset_; }
  std::size_t prec() const;
  const CoefficientRing& ring() const { return ring_; }
  const Storage& storage() const { return coeffs_; }

  std::span<const Integer> integers() const;
  std::span<const Rational> rationals() const;
  std::span<const std::uint64_t> residues() const;

  /// Slot n as an exact rational; residues are returned as their representative in [0, m).
  Rational slot(std::size_t n) const;
  bool slot_is_zero(std::size_t n) const;

  /// Exponent just past the exact range: offset + prec.
  Rational horizon() const { return offset_ + Rational(static_cast<unsigned long>(prec())); }

  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  Rational offset_;
  CoefficientRing ring_;
  Storage coeffs_;
};

QSeries monomial(const Rational& exponent, const CoefficientRing& ring, std::size_t prec);
QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries negate(const QSeries& a);
QSeries mul(const QSeries& a, const QSeries& b, const MulOptions& options = {});
QSeries mul_schoolbook(const QSeries& a, const QSeries& b);
QSeries invert(const QSeries& a);
QSeries pow(const QSeries& a, std::int64_t e);
QSeries reduce_mod(const QSeries& a, std::uint64_t m);
QSeries extract_progression(const QSeries& a, std::uint64_t m, std::uint64_t t);
QSeries substitute_power(const QSeries& a, std::uint64_t k);
/// Same series with precision lowered to prec (prec must not exceed the current one).
QSeries truncate(const QSeries& a, std::size_t prec);

/// Exact coefficient of q^exponent; nullopt when exponent - offset is not an integer.
std::optional<Rational> coefficient_at(const QSeries& a, const Rational& exponent);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

}  // namespace mockcong
