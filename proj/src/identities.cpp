#include "mockcong/identities.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace mockcong {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::mt19937_64 suite_rng(const SuiteOptions& options, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

void record(SuiteResult& result, bool ok, const std::string& instance) {
  ++result.total;
  if (ok) {
    ++result.passed;
  } else {
    result.failures.push_back(instance);
  }
}

std::string describe(const UnimodularMatrix& A, std::int64_t m = 0, std::int64_t extra = -1, const char* tag = "t") {
  std::ostringstream os;
  os << "A=" << A.to_string();
  if (m > 0) os << " m=" << m;
  if (extra >= 0) os << " " << tag << "=" << extra;
  return os.str();
}

SuiteResult named(std::string name) {
  SuiteResult result;
  result.name = std::move(name);
  return result;
}

bool is_even_integer(const Rational& x) { return x.get_den() == 1 && mpz_even_p(x.get_num().get_mpz_t()); }

}  // namespace

UnimodularMatrix random_gamma0(std::mt19937_64& rng, std::int64_t level, std::int64_t k_max,
                               std::int64_t unit_modulus) {
  if (level < 1 || k_max < 1 || unit_modulus < 1) throw Error(ErrorCode::InvalidArgument, "bad sampling range");
  for (;;) {
    const std::int64_t c = level * uniform(rng, 1, k_max);
    const std::int64_t d = uniform(rng, -c, c);
    if (std::gcd(d, c) != 1) continue;
    std::int64_t a = c == 1 ? 0 : inverse_mod(d, c);
    // a runs over the class d^{-1} mod c; step until a meets the unit condition
    std::int64_t steps = 0;
    while (std::gcd(a, unit_modulus) != 1 && steps < unit_modulus) {
      a += c;
      ++steps;
    }
    if (std::gcd(a, unit_modulus) != 1) continue;
    a += c * unit_modulus * uniform(rng, -2, 2);
    const std::int64_t b = (a * d - 1) / c;
    return UnimodularMatrix(a, b, c, d);
  }
}

std::complex<double> eta_numeric(std::complex<double> z, int min_terms) {
  const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
  const std::complex<double> q = std::exp(two_pi_i * z);
  const double abs_q = std::abs(q);
  std::complex<double> product = 1.0;
  std::complex<double> qn = 1.0;
  double magnitude = 1.0;
  for (int n = 1; n <= min_terms || magnitude > 1e-17; ++n) {
    qn *= q;
    magnitude *= abs_q;
    product *= 1.0 - qn;
  }
  return std::exp(two_pi_i * z / 24.0) * product;
}

bool completion_vanishes(const Progression& p, TransformKind kind) {
  const std::int64_t m = p.m;
  for (std::int64_t k = 0; k < 2 * m; ++k) {
    if (kind.tag == TransformKind::Tag::Omega) {
      if (floor_mod(3 * k * k + 2 * k + p.t + 1, m) == 0) return false;
    } else if (floor_mod(k * (3 * k + 1) / 2 + p.t, m) == 0) {
      return false;
    }
  }
  return true;
}

SuiteResult suite_lewis(const SuiteOptions& options) {
  SuiteResult result = named("lewis");
  auto rng = suite_rng(options, 1);
  for (std::int64_t i = 0; i < options.trials; ++i) {
    const auto A = random_gamma0(rng, 1, 400);
    record(result, lewis_residual(A).get_den() == 1, describe(A));
  }
  return result;
}

SuiteResult suite_w24(const SuiteOptions& options) {
  SuiteResult result = named("w24");
  auto rng = suite_rng(options, 2);
  for (std::int64_t i = 0; i < options.trials; ++i) {
    const auto A = random_gamma0(rng, 2, 200);
    record(result, scalar_pow(multiplier_w(A), 24).is_one(), describe(A));
  }
  return result;
}

SuiteResult suite_lewis_shift(const SuiteOptions& options) {
  SuiteResult result = named("lewis-shift");
  auto rng = suite_rng(options, 3);
  for (std::int64_t i = 0; i < options.trials; ++i) {
    const std::int64_t m = uniform(rng, 1, options.constancy_m_max);
    const auto A = random_gamma0(rng, level_constant(m), 4, 3);
    record(result, is_even_integer(lewis_shift_residual(A, m)), describe(A, m));
  }
  return result;
}

SuiteResult suite_minus1(const SuiteOptions& options, Minus1Variant variant) {
  SuiteResult result = named(variant == Minus1Variant::Exact ? "minus1" : "minus1-negative-control");
  auto rng = suite_rng(options, 4);
  for (std::int64_t i = 0; i < options.trials; ++i) {
    const std::int64_t m = uniform(rng, 1, options.constancy_m_max);
    const auto A = random_gamma0(rng, level_constant(m), 4, 6);
    const std::int64_t lambda = uniform(rng, 0, m - 1);
    record(result, minus1_identity_check(A, m, lambda, variant), describe(A, m, lambda, "lambda"));
  }
  return result;
}

SuiteResult suite_constancy(const SuiteOptions& options, TransformKind kind) {
  const bool omega = kind.tag == TransformKind::Tag::Omega;
  SuiteResult result = named(omega ? "constancy-omega" : "constancy-f");
  auto rng = suite_rng(options, omega ? 6 : 5);
  for (std::int64_t i = 0; i < options.trials; ++i) {
    const std::int64_t m = uniform(rng, 1, options.constancy_m_max);
    const std::int64_t t = uniform(rng, 0, m - 1);
    const std::int64_t level = omega ? 2 * level_constant(m) : level_constant(m);
    const auto A = random_gamma0(rng, level, 3, omega ? 3 : 6);
    record(result, constancy_check(A, Progression::make(m, t), kind).size() == 1, describe(A, m, t));
  }
  return result;
}

SuiteResult suite_orbit_coverage(const SuiteOptions& options) {
  SuiteResult result = named("orbit-coverage");
  for (std::int64_t m = 1; m <= options.orbit_m_max; ++m) {
    for (const auto kind : {TransformKind::f(), TransformKind::omega()}) {
      const std::int64_t q = q_divisor(m, covering_b(kind));
      for (std::int64_t t = 0; t < m; ++t) {
        std::set<std::int64_t> expected;
        for (std::int64_t j = 0; j < m / q; ++j) expected.insert((t + j * q) % m);
        std::ostringstream os;
        os << (kind.tag == TransformKind::Tag::F ? "F" : "Omega") << " m=" << m << " t=" << t;
        record(result, orbit(Progression::make(m, t), kind) == expected, os.str());
      }
    }
  }
  return result;
}

SuiteResult suite_good_vanishing(const SuiteOptions& options) {
  SuiteResult result = named("good-vanishing");
  for (std::int64_t m = 1; m <= options.vanishing_m_max; ++m) {
    for (const auto kind : {TransformKind::f(), TransformKind::omega()}) {
      for (std::int64_t t = 0; t < m; ++t) {
        const auto p = Progression::make(m, t);
        if (!is_good(p, kind)) continue;
        std::ostringstream os;
        os << (kind.tag == TransformKind::Tag::F ? "F" : "Omega") << " m=" << m << " t=" << t;
        record(result, completion_vanishes(p, kind), os.str());
      }
    }
  }
  return result;
}

SuiteResult suite_eta_numeric(const SuiteOptions& options) {
  SuiteResult result = named("eta-numeric");
  auto rng = suite_rng(options, 7);
  std::uniform_real_distribution<double> jitter(0.0, 0.05);
  for (std::int64_t i = 0; i < options.trials; ++i) {
    const auto A = random_gamma0(rng, 1, options.eta_c_max);
    const auto [a, b, c, d] = A.matrix();
    // Centering z over -d/c keeps Im(Az) as large as the matrix allows.
    const std::complex<double> z(-static_cast<double>(d) / c + jitter(rng), 0.3 + jitter(rng));
    const std::complex<double> az = (static_cast<double>(a) * z + static_cast<double>(b)) /
                                    (static_cast<double>(c) * z + static_cast<double>(d));
    const std::complex<double> automorphy =
        std::sqrt(std::complex<double>(0.0, -1.0) * (static_cast<double>(c) * z + static_cast<double>(d)));
    const double error = std::abs(eta_numeric(az) - eta_multiplier(A).to_complex() * automorphy * eta_numeric(z));
    std::ostringstream os;
    os << describe(A) << " z=" << z << " error=" << error;
    record(result, error < options.eta_tolerance, os.str());
  }
  return result;
}

std::vector<SuiteResult> run_identity_suites(const SuiteOptions& options) {
  return {suite_lewis(options),
          suite_w24(options),
          suite_lewis_shift(options),
          suite_minus1(options),
          suite_constancy(options, TransformKind::f()),
          suite_constancy(options, TransformKind::omega()),
          suite_orbit_coverage(options),
          suite_good_vanishing(options),
          suite_eta_numeric(options)};
}

SuiteResult run_negative_control(const SuiteOptions& options) {
  return suite_minus1(options, Minus1Variant::DropThreeEighths);
}

}  // namespace mockcong
