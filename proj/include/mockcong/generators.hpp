#pragma once

// Generating functions: eta-quotients, the mock theta functions f and omega,
// the weight 3/2 theta series, and brute-force combinatorial oracles.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mockcong/qseries.hpp"

namespace mockcong {

struct EtaFactor {
  std::int64_t delta;
  std::int64_t r;

  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// prod eta(delta z)^{r_delta}; factors are kept sorted by delta, deltas distinct, r nonzero.
class EtaQuotientSpec {
 public:
  explicit EtaQuotientSpec(std::vector<EtaFactor> factors);

  const std::vector<EtaFactor>& factors() const { return factors_; }
  /// B = sum delta * r_delta, so the expansion starts at q^{B/24}.
  std::int64_t b() const { return b_; }
  /// sum r_delta (twice the weight).
  std::int64_t weight_twice() const { return weight_twice_; }
  /// lcm of the deltas.
  std::int64_t level() const { return level_; }

  /// Canonical text form, e.g. "1^-4,2^5,4^-2".
  std::string to_string() const;

  friend bool operator==(const EtaQuotientSpec& a, const EtaQuotientSpec& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<EtaFactor> factors_;
  std::int64_t b_;
  std::int64_t weight_twice_;
  std::int64_t level_;
};

/// Parses "delta^exponent,..." (e.g. "1^-4,2^5,4^-2"). Throws GrammarError.
EtaQuotientSpec parse_eta_quotient(const std::string& text);

enum class Builtin { MockF, MockOmega, ThetaG0, ThetaG1, ThetaG2 };

struct SeriesCatalogEntry {
  std::string name;
  std::variant<EtaQuotientSpec, Builtin> spec;
  std::string description;
};

/// The fixed catalog of named series.
const std::vector<SeriesCatalogEntry>& catalog();
/// Catalog lookup; also resolves "multipartition_<k>" for any k >= 1. Throws UnknownSeries.
SeriesCatalogEntry find_series(const std::string& name);

/// eta(z) = q^{1/24} prod (1 - q^n), from the pentagonal number theorem.
QSeries eta_series(std::size_t prec, const CoefficientRing& ring = CoefficientRing::integer());
QSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t prec,
                     const CoefficientRing& ring = CoefficientRing::integer());
/// f(q) = sum_{n>=0} q^{n^2} / ((1+q)^2 ... (1+q^n)^2)
QSeries mock_f(std::size_t prec, const CoefficientRing& ring = CoefficientRing::integer());
/// omega(q) = sum_{n>=0} q^{2n^2+2n} / ((1-q)^2 (1-q^3)^2 ... (1-q^{2n+1})^2)
QSeries mock_omega(std::size_t prec, const CoefficientRing& ring = CoefficientRing::integer());

/// Theta series g0, g1, g2 over the rationals.
///
/// g1 is returned as a series in q (offset 1/24). g0 and g2 have exponents
/// (3n+1)^2/6, which are not integrally spaced in q, so they are returned as
/// expansions of g0(2z), g2(2z) (offset 1/3): the coefficient of q^x in g(z)
/// is the coefficient of q^{2x} here.
QSeries theta_g(int index, std::size_t prec);
/// 1 for g1, 2 for g0 and g2: the factor applied to exponents by theta_g().
int theta_exponent_scale(int index);

/// Builds a catalog entry at the given precision. Theta entries ignore ring and are rational.
QSeries build_series(const SeriesCatalogEntry& entry, std::size_t prec,
                     const CoefficientRing& ring = CoefficientRing::integer());

inline constexpr std::int64_t kDefaultOracleBound = 60;

/// N_e(n) - N_o(n) by enumerating partitions of n; rank = largest part - number of parts.
std::int64_t rank_diff_oracle(std::int64_t n, std::int64_t bound = kDefaultOracleBound);

/// Number of partitions of n+1 into a largest part L plus pairs (k+1)+k, k >= 0, with k+1 <= L.
std::int64_t omega_partition_oracle(std::int64_t n, std::int64_t bound = kDefaultOracleBound);

/// p(n) by enumerating partitions of n.
std::int64_t partition_count_oracle(std::int64_t n, std::int64_t bound = kDefaultOracleBound);

}  // namespace mockcong
