#include "mockcong/scanner.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace mockcong {

namespace {

QSeries as_residues(const QSeries& series, std::uint64_t ell) {
  if (series.ring() == CoefficientRing::modulo(ell)) return series;
  return reduce_mod(series, ell);
}

std::optional<Witness> first_nonzero(std::span<const std::uint64_t> coeffs, const Progression& p,
                                     std::int64_t n_max) {
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const std::uint64_t v = coeffs[static_cast<std::size_t>(p.m * n + p.t)];
    if (v != 0) return Witness{n, v};
  }
  return std::nullopt;
}

std::int64_t lcm_of_deltas(const EtaQuotientSpec& spec) {
  std::int64_t n = 1;
  for (const auto& f : spec.factors()) n = std::lcm(n, f.delta);
  return n;
}

}  // namespace

const ScanVerdict& ScanReport::at(std::int64_t m, std::int64_t t) const {
  for (const auto& v : verdicts) {
    if (v.progression.m == m && v.progression.t == t) return v;
  }
  throw Error(ErrorCode::InvalidArgument, "no verdict for (" + std::to_string(m) + "," + std::to_string(t) + ")");
}

ScanReport scan(const QSeries& series, std::uint64_t ell, std::int64_t m_max, const std::string& name) {
  if (!is_prime(static_cast<std::int64_t>(ell))) throw Error(ErrorCode::InvalidArgument, "modulus must be prime");
  if (m_max < 1) throw Error(ErrorCode::InvalidArgument, "m_max must be positive");
  const auto prec = static_cast<std::int64_t>(series.prec());
  if (prec < m_max) {
    throw Error(ErrorCode::InsufficientPrecision,
                "precision " + std::to_string(prec) + " is below m_max " + std::to_string(m_max));
  }
  const QSeries reduced = as_residues(series, ell);
  const auto coeffs = reduced.residues();
  ScanReport report{name, ell, m_max, prec, {}};
  for (std::int64_t m = 1; m <= m_max; ++m) {
    for (std::int64_t t = 0; t < m; ++t) {
      const Progression p{m, t};
      const std::int64_t n_max = (prec - 1 - t) / m;
      if (auto w = first_nonzero(coeffs, p, n_max)) {
        report.verdicts.push_back({p, *w});
      } else {
        report.verdicts.push_back({p, Candidate{n_max}});
      }
    }
  }
  return report;
}

std::optional<std::int64_t> witness(const QSeries& series, std::uint64_t ell, const Progression& p,
                                    std::int64_t n_max) {
  if (n_max < 0) return std::nullopt;
  if (p.m * n_max + p.t >= static_cast<std::int64_t>(series.prec())) {
    throw Error(ErrorCode::InsufficientPrecision, "precision does not cover index m*n_max + t");
  }
  const QSeries reduced = as_residues(series, ell);
  if (auto w = first_nonzero(reduced.residues(), p, n_max)) return w->n;
  return std::nullopt;
}

std::optional<EtaQuotientSpec> strip_ell_powers(const EtaQuotientSpec& spec, std::int64_t ell) {
  std::map<std::int64_t, std::int64_t> merged;
  for (const auto& f : spec.factors()) {
    const auto [power, rest] = split_prime_power(f.delta, ell);
    merged[rest] += power * f.r;
  }
  std::vector<EtaFactor> factors;
  for (const auto& [delta, r] : merged) {
    if (r != 0) factors.push_back({delta, r});
  }
  if (factors.empty()) return std::nullopt;
  return EtaQuotientSpec(std::move(factors));
}

Applicability theorem_applies(const EtaQuotientSpec& spec, std::int64_t ell, std::int64_t m) {
  Applicability result;
  const auto fail = [&](const char* reason) {
    result.applies = false;
    result.reasons.emplace_back(reason);
  };
  const std::int64_t b = spec.b();
  if (ell != 2 && ell != 3) fail("ell-not-2-or-3");
  if (ell > 1 && b % ell == 0) fail("ell-divides-B");
  if (b >= 0) fail("no-pole");
  if (b % 6 == 0) {
    fail("B-divisible-by-6");
  } else if (ell > 1 && m >= 1) {
    const auto stripped = strip_ell_powers(spec, ell);
    const std::int64_t n_prime = stripped ? lcm_of_deltas(*stripped) : 1;
    if (std::gcd(q_divisor(m, b), n_prime) != 1) fail("Q-shares-factor-with-N");
  }
  return result;
}

EtaInfo eta_info(const EtaQuotientSpec& spec, std::int64_t ell, std::int64_t m) {
  EtaInfo info{};
  info.b = spec.b();
  info.k_twice = spec.weight_twice();
  info.level = spec.level();
  info.pole_at_infinity = spec.b() < 0;
  if (spec.b() % 6 != 0 && m >= 1) info.q_divisor = q_divisor(m, spec.b());
  const auto stripped = ell > 1 ? strip_ell_powers(spec, ell) : std::optional<EtaQuotientSpec>(spec);
  if (stripped) {
    info.stripped_level = lcm_of_deltas(*stripped);
    info.quotient_k_twice = stripped->weight_twice() - stripped->b();
    const std::int64_t n = info.stripped_level;
    Rational sum = -stripped->b();
    for (const auto& f : stripped->factors()) sum += Rational(f.r, f.delta);
    sum *= n * n;
    info.newman_congruence = sum.get_den() == 1 && sum.get_num() % 24 == 0;
  } else {
    info.stripped_level = 1;
    info.quotient_k_twice = 0;
    info.newman_congruence = true;
  }
  info.applicability = theorem_applies(spec, ell, m);
  return info;
}

std::int64_t sturm_bound(std::int64_t k_twice, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "level must be positive");
  std::int64_t index = 1;
  if (n == 2) {
    index = 3;
  } else if (n >= 3) {
    index = n * n;
    for (const std::int64_t p : prime_divisors(n)) index = index / (p * p) * (p * p - 1);
  }
  const std::int64_t numerator = k_twice * index;
  if (numerator <= 0) return 0;
  return (numerator + 23) / 24;
}

std::vector<ClaimResult> verify_known() {
  std::vector<ClaimResult> out;
  const auto zero_on = [&](const std::string& id, const std::string& series, std::uint64_t ell, std::int64_t m,
                           std::int64_t t, std::int64_t n_max) {
    const auto entry = find_series(series);
    const auto s = build_series(entry, static_cast<std::size_t>(m * n_max + t + 1), CoefficientRing::modulo(ell));
    const auto w = witness(s, ell, Progression{m, t}, n_max);
    std::ostringstream os;
    os << series << "(" << m << "n+" << t << ") mod " << ell << ", n <= " << n_max;
    if (w) os << ": nonzero at n=" << *w;
    out.push_back({id, !w.has_value(), os.str()});
  };
  zero_on("partition-mod5", "partition", 5, 5, 4, 2000);
  zero_on("cubic-mod3", "cubic", 3, 3, 2, 1500);
  zero_on("cphi2-mod2", "cphi2", 2, 2, 1, 1500);
  zero_on("cphi2-mod5", "cphi2", 5, 5, 3, 1500);
  zero_on("core4-mod2", "core4", 2, 9, 2, 1500);
  zero_on("crank-mod5", "crank_diff", 5, 5, 4, 1500);
  for (std::int64_t r = 1; r <= 4; ++r) zero_on("eta5inv-mod2-r" + std::to_string(r), "eta5inv", 2, 5, r, 1500);

  constexpr std::size_t kParityPrec = 2001;
  {
    const auto f = mock_f(kParityPrec, CoefficientRing::modulo(2));
    const auto p = build_series(find_series("partition"), kParityPrec, CoefficientRing::modulo(2));
    std::int64_t first_bad = -1;
    for (std::size_t n = 0; n < kParityPrec && first_bad < 0; ++n) {
      if (f.residues()[n] != p.residues()[n]) first_bad = static_cast<std::int64_t>(n);
    }
    out.push_back({"f-parity", first_bad < 0,
                   first_bad < 0 ? "a(n) = p(n) mod 2 for n <= 2000" : "differs at n=" + std::to_string(first_bad)});
  }
  {
    const auto w = mock_omega(kParityPrec, CoefficientRing::modulo(2));
    std::vector<bool> special(kParityPrec, false);
    for (std::int64_t j = -40; j <= 40; ++j) {
      const std::int64_t n = 6 * j * j + 4 * j;
      if (n < static_cast<std::int64_t>(kParityPrec)) special[static_cast<std::size_t>(n)] = true;
    }
    std::int64_t first_bad = -1;
    for (std::size_t n = 0; n < kParityPrec && first_bad < 0; ++n) {
      if ((w.residues()[n] == 1) != special[n]) first_bad = static_cast<std::int64_t>(n);
    }
    out.push_back({"omega-parity", first_bad < 0,
                   first_bad < 0 ? "c(n) odd iff n = 6j^2+4j for n <= 2000"
                                 : "fails at n=" + std::to_string(first_bad)});
  }
  return out;
}

std::string to_json(const ScanReport& report) {
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  for (const auto& v : report.verdicts) {
    nlohmann::ordered_json row{{"m", v.progression.m}, {"t", v.progression.t}};
    if (const auto* w = std::get_if<Witness>(&v.status)) {
      row["status"] = "witness";
      row["n"] = w->n;
      row["value"] = w->value;
    } else {
      row["status"] = "candidate";
      row["checked"] = std::get<Candidate>(v.status).checked_up_to;
    }
    verdicts.push_back(std::move(row));
  }
  nlohmann::ordered_json doc{{"series", report.series_name},
                             {"modulus", report.modulus},
                             {"m_max", report.m_max},
                             {"budget", report.coeff_budget},
                             {"verdicts", std::move(verdicts)}};
  return doc.dump(2);
}

std::string to_csv(const ScanReport& report) {
  std::ostringstream os;
  os << "m,t,status,n,value,checked\n";
  for (const auto& v : report.verdicts) {
    os << v.progression.m << "," << v.progression.t << ",";
    if (const auto* w = std::get_if<Witness>(&v.status)) {
      os << "witness," << w->n << "," << w->value << ",\n";
    } else {
      os << "candidate,,," << std::get<Candidate>(v.status).checked_up_to << "\n";
    }
  }
  return os.str();
}

}  // namespace mockcong
