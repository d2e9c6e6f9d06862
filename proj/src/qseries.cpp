#include "mockcong/qseries.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "mockcong/detail/dispatch.hpp"

namespace mockcong {

namespace {

using detail::IntegerOps;
using detail::ModOps;
using detail::RationalOps;

using detail::coeffs_of;
using detail::make_series;
using detail::with_ops;

void require_same_ring(const QSeries& a, const QSeries& b) {
  if (a.ring() != b.ring()) {
    throw Error(ErrorCode::RingMismatch, a.ring().to_string() + " vs " + b.ring().to_string());
  }
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

std::int64_t to_int64(const Rational& x) {
  // caller guarantees integrality and range
  return x.get_num().get_si();
}

}  // namespace

CoefficientRing CoefficientRing::modulo(std::uint64_t m) {
  if (m < 2 || m > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::InvalidArgument, "modulus must lie in [2, 2^32)");
  }
  return CoefficientRing(Kind::IntegerMod, m);
}

std::string CoefficientRing::to_string() const {
  switch (kind_) {
    case Kind::Integer: return "integer";
    case Kind::Rational: return "rational";
    case Kind::IntegerMod: break;
  }
  return "mod " + std::to_string(modulus_);
}

QSeries::QSeries(Rational offset, CoefficientRing ring, std::size_t prec)
    : offset_(std::move(offset)), ring_(ring) {
  if (prec == 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  with_ops(ring_, [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    coeffs_ = std::vector<T>(prec, ops.zero());
  });
}

QSeries::QSeries(Rational offset, IntegerCoeffs coeffs)
    : offset_(std::move(offset)), ring_(CoefficientRing::integer()), coeffs_(std::move(coeffs)) {
  if (prec() == 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
}

QSeries::QSeries(Rational offset, RationalCoeffs coeffs)
    : offset_(std::move(offset)), ring_(CoefficientRing::rational()), coeffs_(std::move(coeffs)) {
  if (prec() == 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
}

QSeries::QSeries(Rational offset, std::uint64_t modulus, ResidueCoeffs coeffs)
    : offset_(std::move(offset)), ring_(CoefficientRing::modulo(modulus)) {
  if (coeffs.empty()) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  for (auto& c : coeffs) c %= modulus;
  coeffs_ = std::move(coeffs);
}

std::size_t QSeries::prec() const {
  return std::visit([](const auto& v) { return v.size(); }, coeffs_);
}

std::span<const Integer> QSeries::integers() const {
  if (const auto* v = std::get_if<IntegerCoeffs>(&coeffs_)) return *v;
  throw Error(ErrorCode::RingMismatch, "series is over " + ring_.to_string() + ", not integer");
}

std::span<const Rational> QSeries::rationals() const {
  if (const auto* v = std::get_if<RationalCoeffs>(&coeffs_)) return *v;
  throw Error(ErrorCode::RingMismatch, "series is over " + ring_.to_string() + ", not rational");
}

std::span<const std::uint64_t> QSeries::residues() const {
  if (const auto* v = std::get_if<ResidueCoeffs>(&coeffs_)) return *v;
  throw Error(ErrorCode::RingMismatch, "series is over " + ring_.to_string() + ", not modular");
}

Rational QSeries::slot(std::size_t n) const {
  return std::visit(
      [n](const auto& v) -> Rational {
        using T = typename std::decay_t<decltype(v)>::value_type;
        if constexpr (std::is_same_v<T, std::uint64_t>) {
          return Rational(static_cast<unsigned long>(v.at(n)));
        } else {
          return Rational(v.at(n));
        }
      },
      coeffs_);
}

bool QSeries::slot_is_zero(std::size_t n) const {
  return std::visit([n](const auto& v) { return v.at(n) == 0; }, coeffs_);
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.offset_ == b.offset_ && a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

QSeries monomial(const Rational& exponent, const CoefficientRing& ring, std::size_t prec) {
  return with_ops(ring, [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    if (prec == 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
    std::vector<T> c(prec, ops.zero());
    c[0] = ops.one();
    return make_series(ops, exponent, std::move(c));
  });
}

namespace {

// Shared alignment for add/sub: the result starts at the smaller offset and is
// exact up to the lower of the two horizons.
template <bool Subtract>
QSeries add_impl(const QSeries& a, const QSeries& b) {
  require_same_ring(a, b);
  const Rational shift = b.offset() - a.offset();
  if (!is_integral(shift)) {
    throw Error(ErrorCode::OffsetMismatch, "offsets " + a.offset().get_str() + " and " +
                                               b.offset().get_str() + " differ by a non-integer");
  }
  const Rational lo = std::min(a.offset(), b.offset());
  const Rational hi = std::min(a.horizon(), b.horizon());
  if (hi <= lo) throw Error(ErrorCode::BeyondPrecision, "no common exact range");
  const auto prec = static_cast<std::size_t>(to_int64(hi - lo));
  const auto a_start = static_cast<std::size_t>(to_int64(a.offset() - lo));
  const auto b_start = static_cast<std::size_t>(to_int64(b.offset() - lo));

  return with_ops(a.ring(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& ca = coeffs_of<Ops>(a);
    const auto& cb = coeffs_of<Ops>(b);
    std::vector<typename Ops::T> out(prec, ops.zero());
    for (std::size_t i = a_start; i < prec && i - a_start < ca.size(); ++i) ops.add_to(out[i], ca[i - a_start]);
    for (std::size_t i = b_start; i < prec && i - b_start < cb.size(); ++i) {
      if constexpr (Subtract) {
        ops.sub_from(out[i], cb[i - b_start]);
      } else {
        ops.add_to(out[i], cb[i - b_start]);
      }
    }
    return make_series(ops, lo, std::move(out));
  });
}

}  // namespace

QSeries add(const QSeries& a, const QSeries& b) { return add_impl<false>(a, b); }
QSeries sub(const QSeries& a, const QSeries& b) { return add_impl<true>(a, b); }

QSeries negate(const QSeries& a) {
  return with_ops(a.ring(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    auto c = coeffs_of<Ops>(a);
    for (auto& x : c) x = ops.neg(x);
    return make_series(ops, a.offset(), std::move(c));
  });
}

QSeries mul(const QSeries& a, const QSeries& b, const MulOptions& options) {
  require_same_ring(a, b);
  const std::size_t prec = std::min(a.prec(), b.prec());
  return with_ops(a.ring(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    using T = typename Ops::T;
    std::span<const T> ca = coeffs_of<Ops>(a);
    std::span<const T> cb = coeffs_of<Ops>(b);
    ca = ca.first(prec);
    cb = cb.first(prec);
    auto out = prec > options.fast_threshold ? detail::convolve_karatsuba(ops, ca, cb, prec)
                                             : detail::convolve_schoolbook(ops, ca, cb, prec);
    return make_series(ops, a.offset() + b.offset(), std::move(out));
  });
}

QSeries mul_schoolbook(const QSeries& a, const QSeries& b) {
  return mul(a, b, MulOptions{std::numeric_limits<std::size_t>::max()});
}

QSeries invert(const QSeries& a) {
  return with_ops(a.ring(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    using T = typename Ops::T;
    const auto& c = coeffs_of<Ops>(a);
    if (!ops.is_unit(c[0])) {
      throw Error(ErrorCode::NonUnitLeadingCoefficient, "leading coefficient is not a unit in " + a.ring().to_string());
    }
    auto out = detail::inverse_series(ops, std::span<const T>(c), c.size());
    return make_series(ops, -a.offset(), std::move(out));
  });
}

QSeries pow(const QSeries& a, std::int64_t e) {
  if (e < 0) return pow(invert(a), -e);
  QSeries result = monomial(Rational(0), a.ring(), a.prec());
  QSeries base = a;
  auto n = static_cast<std::uint64_t>(e);
  while (n > 0) {
    if (n & 1U) result = mul(result, base);
    n >>= 1U;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

QSeries reduce_mod(const QSeries& a, std::uint64_t m) {
  const auto target = CoefficientRing::modulo(m);
  switch (a.ring().kind()) {
    case CoefficientRing::Kind::Integer: {
      QSeries::ResidueCoeffs out;
      out.reserve(a.prec());
      const Integer mm(static_cast<unsigned long>(m));
      Integer r;
      for (const auto& c : a.integers()) {
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mm.get_mpz_t());
        out.push_back(r.get_ui());
      }
      return QSeries(a.offset(), target.modulus(), std::move(out));
    }
    case CoefficientRing::Kind::IntegerMod: {
      if (a.ring().modulus() % m != 0) {
        throw Error(ErrorCode::IncompatibleModulus,
                    std::to_string(m) + " does not divide " + std::to_string(a.ring().modulus()));
      }
      QSeries::ResidueCoeffs out(a.residues().begin(), a.residues().end());
      return QSeries(a.offset(), m, std::move(out));
    }
    case CoefficientRing::Kind::Rational: break;
  }
  throw Error(ErrorCode::IncompatibleModulus, "cannot reduce a rational series");
}

QSeries extract_progression(const QSeries& a, std::uint64_t m, std::uint64_t t) {
  if (m == 0 || t >= m) throw Error(ErrorCode::InvalidArgument, "need 0 <= t < m");
  if (a.prec() <= t) throw Error(ErrorCode::BeyondPrecision, "progression starts past the precision");
  const std::size_t prec = (a.prec() - t + m - 1) / m;
  const Rational offset = (a.offset() + Rational(static_cast<unsigned long>(t))) / Rational(static_cast<unsigned long>(m));
  return std::visit(
      [&](const auto& v) -> QSeries {
        using Vec = std::decay_t<decltype(v)>;
        Vec out;
        out.reserve(prec);
        for (std::size_t n = 0; n < prec; ++n) out.push_back(v[m * n + t]);
        if constexpr (std::is_same_v<Vec, QSeries::ResidueCoeffs>) {
          return QSeries(offset, a.ring().modulus(), std::move(out));
        } else {
          return QSeries(offset, std::move(out));
        }
      },
      a.storage());
}

QSeries substitute_power(const QSeries& a, std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "power must be positive");
  const Rational offset = a.offset() * Rational(static_cast<unsigned long>(k));
  return with_ops(a.ring(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& c = coeffs_of<Ops>(a);
    std::vector<typename Ops::T> out(c.size() * k, ops.zero());
    for (std::size_t n = 0; n < c.size(); ++n) out[n * k] = c[n];
    return make_series(ops, offset, std::move(out));
  });
}

QSeries truncate(const QSeries& a, std::size_t prec) {
  if (prec == 0 || prec > a.prec()) throw Error(ErrorCode::BeyondPrecision, "cannot truncate to a larger precision");
  return std::visit(
      [&](const auto& v) -> QSeries {
        using Vec = std::decay_t<decltype(v)>;
        Vec out(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(prec));
        if constexpr (std::is_same_v<Vec, QSeries::ResidueCoeffs>) {
          return QSeries(a.offset(), a.ring().modulus(), std::move(out));
        } else {
          return QSeries(a.offset(), std::move(out));
        }
      },
      a.storage());
}

std::optional<Rational> coefficient_at(const QSeries& a, const Rational& exponent) {
  if (exponent >= a.horizon()) {
    std::ostringstream os;
    os << "exponent " << exponent << " is not below " << a.horizon();
    throw Error(ErrorCode::BeyondPrecision, os.str());
  }
  const Rational rel = exponent - a.offset();
  if (!is_integral(rel)) return std::nullopt;
  if (rel < 0) return Rational(0);
  return a.slot(static_cast<std::size_t>(to_int64(rel)));
}

}  // namespace mockcong
