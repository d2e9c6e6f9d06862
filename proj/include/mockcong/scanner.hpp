#pragma once

// Searching arithmetic progressions of coefficients for vanishing mod a prime.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mockcong/generators.hpp"
#include "mockcong/transform.hpp"

namespace mockcong {

inline constexpr std::int64_t kDefaultBudget = 20000;

struct Witness {
  std::int64_t n;
  std::uint64_t value;  // coefficient at mn + t, reduced into [1, ell)
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Candidate {
  std::int64_t checked_up_to;  // every n <= checked_up_to vanished
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct ScanVerdict {
  Progression progression;
  std::variant<Witness, Candidate> status;

  bool is_witness() const { return std::holds_alternative<Witness>(status); }
};

struct ScanReport {
  std::string series_name;
  std::uint64_t modulus = 0;
  std::int64_t m_max = 0;
  std::int64_t coeff_budget = 0;
  std::vector<ScanVerdict> verdicts;  // m ascending, then t ascending

  const ScanVerdict& at(std::int64_t m, std::int64_t t) const;
};

/// One verdict per (m, t), m <= m_max. The budget is the precision of the series.
/// Throws InsufficientPrecision when prec < m_max.
ScanReport scan(const QSeries& series, std::uint64_t ell, std::int64_t m_max, const std::string& name = "");

/// Smallest n <= n_max with coefficient(mn + t) != 0 mod ell.
/// Throws InsufficientPrecision unless mn_max + t < prec.
std::optional<std::int64_t> witness(const QSeries& series, std::uint64_t ell, const Progression& p,
                                    std::int64_t n_max);

struct Applicability {
  bool applies = true;
  std::vector<std::string> reasons;
};

/// Hypothesis check for the no-congruence corollary on eta-quotients. Reason codes:
/// ell-not-2-or-3, ell-divides-B, no-pole, B-divisible-by-6, Q-shares-factor-with-N.
Applicability theorem_applies(const EtaQuotientSpec& spec, std::int64_t ell, std::int64_t m);

/// The quotient with each eta(ell^s d z)^r replaced by eta(d z)^{ell^s r}; factors merged.
/// Empty when every factor cancels.
std::optional<EtaQuotientSpec> strip_ell_powers(const EtaQuotientSpec& spec, std::int64_t ell);

struct EtaInfo {
  std::int64_t b;
  std::int64_t k_twice;
  std::int64_t level;
  bool pole_at_infinity;
  std::optional<std::int64_t> q_divisor;  // absent when 6 | B
  std::int64_t stripped_level;            // N' after removing ell-powers
  std::int64_t quotient_k_twice;          // sum r - B, twice the weight of f / eta^B
  bool newman_congruence;                 // N'^2 (sum r/delta - B) = 0 mod 24
  Applicability applicability;
};

EtaInfo eta_info(const EtaQuotientSpec& spec, std::int64_t ell, std::int64_t m);

/// ceil((k_twice / 2) * index / 12) with index = N^2 prod_{p | N}(1 - 1/p^2) (N >= 3), 1 (N = 1), 3 (N = 2).
std::int64_t sturm_bound(std::int64_t k_twice, std::int64_t n);

struct ClaimResult {
  std::string id;
  bool passed;
  std::string detail;
};

/// The hard-coded congruence and parity claims at their default bounds.
std::vector<ClaimResult> verify_known();

std::string to_json(const ScanReport& report);
std::string to_csv(const ScanReport& report);

}  // namespace mockcong
