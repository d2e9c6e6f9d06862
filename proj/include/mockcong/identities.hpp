#pragma once

// Seeded property suites over random Gamma_0(N) matrices. Each suite counts
// passing instances and keeps a printable description of every failure.

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mockcong/transform.hpp"

namespace mockcong {

inline constexpr std::uint64_t kDefaultSeed = 20130917;

struct SuiteResult {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t total = 0;
  std::vector<std::string> failures;

  bool ok() const { return total > 0 && passed == total; }
};

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::int64_t trials = 100;
  std::int64_t orbit_m_max = 60;
  std::int64_t vanishing_m_max = 60;
  std::int64_t constancy_m_max = 12;
  std::int64_t eta_c_max = 20;
  double eta_tolerance = 1e-9;
};

/// Random element of Gamma_0(level) with c = level * k, 1 <= k <= k_max, and
/// gcd(a, unit_modulus) = 1 (pass 1 for no condition on a).
UnimodularMatrix random_gamma0(std::mt19937_64& rng, std::int64_t level, std::int64_t k_max,
                               std::int64_t unit_modulus = 1);

/// eta(z) from the product formula, with at least min_terms factors and more
/// until |q|^n falls below 1e-17.
std::complex<double> eta_numeric(std::complex<double> z, int min_terms = 200);

/// True when no slot of the completion term meets the progression: no k with
/// k(3k+1)/2 = -t (F) or 3k^2 + 2k = -t - 1 (Omega) mod m.
bool completion_vanishes(const Progression& p, TransformKind kind);

SuiteResult suite_lewis(const SuiteOptions& options);
SuiteResult suite_w24(const SuiteOptions& options);
SuiteResult suite_lewis_shift(const SuiteOptions& options);
SuiteResult suite_minus1(const SuiteOptions& options, Minus1Variant variant = Minus1Variant::Exact);
SuiteResult suite_constancy(const SuiteOptions& options, TransformKind kind);
SuiteResult suite_orbit_coverage(const SuiteOptions& options);
SuiteResult suite_good_vanishing(const SuiteOptions& options);
SuiteResult suite_eta_numeric(const SuiteOptions& options);

/// Every suite above, in a fixed order.
std::vector<SuiteResult> run_identity_suites(const SuiteOptions& options);
/// The minus1 suite with the 3/8 term dropped; expected to report failures.
SuiteResult run_negative_control(const SuiteOptions& options);

}  // namespace mockcong
