#include "mockcong/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "mockcong/detail/dispatch.hpp"

namespace mockcong {

using detail::SparseTerms;

// ---- EtaQuotientSpec -------------------------------------------------------

EtaQuotientSpec::EtaQuotientSpec(std::vector<EtaFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::InvalidArgument, "eta-quotient needs at least one factor");
  std::sort(factors_.begin(), factors_.end(), [](const auto& x, const auto& y) { return x.delta < y.delta; });
  b_ = 0;
  weight_twice_ = 0;
  level_ = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& [delta, r] = factors_[i];
    if (delta < 1) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
    if (r == 0) throw Error(ErrorCode::InvalidArgument, "exponent must be nonzero");
    if (i > 0 && factors_[i - 1].delta == delta) {
      throw Error(ErrorCode::InvalidArgument, "repeated delta " + std::to_string(delta));
    }
    b_ += delta * r;
    weight_twice_ += r;
    level_ = std::lcm(level_, delta);
  }
}

std::string EtaQuotientSpec::to_string() const {
  std::string out;
  for (const auto& [delta, r] : factors_) {
    if (!out.empty()) out += ',';
    out += std::to_string(delta) + '^' + std::to_string(r);
  }
  return out;
}

namespace {

std::int64_t parse_int(std::string_view text, const std::string& whole) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorCode::GrammarError, "bad integer '" + std::string(text) + "' in '" + whole + "'");
  }
  return value;
}

}  // namespace

EtaQuotientSpec parse_eta_quotient(const std::string& text) {
  std::vector<EtaFactor> factors;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto caret = item.find('^');
    if (caret == std::string_view::npos) {
      throw Error(ErrorCode::GrammarError, "expected delta^exponent, got '" + std::string(item) + "'");
    }
    const std::int64_t delta = parse_int(item.substr(0, caret), text);
    const std::int64_t r = parse_int(item.substr(caret + 1), text);
    if (delta < 1) throw Error(ErrorCode::GrammarError, "delta must be a positive integer in '" + text + "'");
    if (r == 0) throw Error(ErrorCode::GrammarError, "exponent must be nonzero in '" + text + "'");
    for (const auto& f : factors) {
      if (f.delta == delta) throw Error(ErrorCode::GrammarError, "repeated delta in '" + text + "'");
    }
    factors.push_back({delta, r});
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return EtaQuotientSpec(std::move(factors));
}

// ---- catalog ---------------------------------------------------------------

const std::vector<SeriesCatalogEntry>& catalog() {
  static const std::vector<SeriesCatalogEntry> entries = [] {
    auto eq = [](std::vector<EtaFactor> f) { return EtaQuotientSpec(std::move(f)); };
    return std::vector<SeriesCatalogEntry>{
        {"partition", eq({{1, -1}}), "1/eta(z): ordinary partitions p(n)"},
        {"multipartition_2", eq({{1, -2}}), "eta(z)^-2: 2-multipartitions"},
        {"multipartition_3", eq({{1, -3}}), "eta(z)^-3: 3-multipartitions"},
        {"cubic", eq({{1, -1}, {2, -1}}), "1/(eta(z) eta(2z)): cubic partitions cu(n)"},
        {"crank_diff", eq({{1, 3}, {2, -2}}), "eta(z)^3/eta(2z)^2: M_e(n) - M_o(n)"},
        {"cphi2", eq({{1, -4}, {2, 5}, {4, -2}}), "eta(2z)^5/(eta(z)^4 eta(4z)^2): Frobenius symbols c-phi_2(n)"},
        {"core4", eq({{1, -1}, {4, 4}}), "eta(4z)^4/eta(z): 4-core partitions c_4(n)"},
        {"eta5inv", eq({{5, -1}}), "1/eta(5z)"},
        {"mock_f", Builtin::MockF, "third order mock theta function f(q)"},
        {"mock_omega", Builtin::MockOmega, "third order mock theta function omega(q)"},
        {"theta_g0", Builtin::ThetaG0, "theta series g0, as g0(2z)"},
        {"theta_g1", Builtin::ThetaG1, "theta series g1"},
        {"theta_g2", Builtin::ThetaG2, "theta series g2, as g2(2z)"},
    };
  }();
  return entries;
}

SeriesCatalogEntry find_series(const std::string& name) {
  for (const auto& entry : catalog()) {
    if (entry.name == name) return entry;
  }
  constexpr std::string_view prefix = "multipartition_";
  if (name.starts_with(prefix)) {
    std::int64_t k = 0;
    const auto digits = std::string_view(name).substr(prefix.size());
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && k >= 1) {
      return {name, EtaQuotientSpec({{1, -k}}), "eta(z)^-" + std::to_string(k) + ": k-multipartitions"};
    }
  }
  throw Error(ErrorCode::UnknownSeries, "no catalog series named '" + name + "'");
}

// ---- series ----------------------------------------------------------------

namespace {

/// Nonzero terms of prod_{n>=1} (1 - q^{delta n}) below prec, without the constant 1.
SparseTerms eta_product_terms(std::size_t delta, std::size_t prec) {
  SparseTerms terms;
  for (std::size_t j = 1;; ++j) {
    const std::size_t e1 = delta * (j * (3 * j - 1) / 2);
    if (e1 >= prec) break;
    const std::int64_t sign = j % 2 == 0 ? 1 : -1;
    terms.emplace_back(e1, sign);
    const std::size_t e2 = delta * (j * (3 * j + 1) / 2);
    if (e2 < prec) terms.emplace_back(e2, sign);
  }
  return terms;
}

}  // namespace

QSeries eta_series(std::size_t prec, const CoefficientRing& ring) {
  if (prec == 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  return detail::with_ops(ring, [&](const auto& ops) {
    std::vector<typename std::decay_t<decltype(ops)>::T> c(prec, ops.zero());
    c[0] = ops.one();
    for (const auto& [e, sign] : eta_product_terms(1, prec)) c[e] = ops.from_int(sign);
    return detail::make_series(ops, Rational(1, 24), std::move(c));
  });
}

QSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t prec, const CoefficientRing& ring) {
  if (prec == 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  Rational offset(spec.b(), 24);
  offset.canonicalize();
  return detail::with_ops(ring, [&](const auto& ops) {
    std::vector<typename std::decay_t<decltype(ops)>::T> c(prec, ops.zero());
    c[0] = ops.one();
    // Each factor is applied |r| times as a sparse multiply or divide by
    // prod (1 - q^{delta n}), which has O(sqrt(prec/delta)) terms.
    for (const auto& [delta, r] : spec.factors()) {
      const auto terms = eta_product_terms(static_cast<std::size_t>(delta), prec);
      for (std::int64_t i = 0; i < std::abs(r); ++i) {
        if (r > 0) {
          detail::multiply_sparse(ops, c, terms);
        } else {
          detail::divide_sparse(ops, c, terms);
        }
      }
    }
    return detail::make_series(ops, offset, std::move(c));
  });
}

QSeries mock_f(std::size_t prec, const CoefficientRing& ring) {
  if (prec == 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  return detail::with_ops(ring, [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    std::vector<T> acc(prec, ops.zero());
    std::vector<T> pochhammer(prec, ops.zero());  // 1 / ((1+q)...(1+q^n))^2
    pochhammer[0] = ops.one();
    acc[0] = ops.one();
    for (std::size_t n = 1; n * n < prec; ++n) {
      const std::size_t lead = n * n;
      pochhammer.resize(prec - lead);
      const SparseTerms one_plus{{n, 1}};
      detail::divide_sparse(ops, pochhammer, one_plus);
      detail::divide_sparse(ops, pochhammer, one_plus);
      for (std::size_t i = 0; i < pochhammer.size(); ++i) ops.add_to(acc[lead + i], pochhammer[i]);
    }
    return detail::make_series(ops, Rational(0), std::move(acc));
  });
}

QSeries mock_omega(std::size_t prec, const CoefficientRing& ring) {
  if (prec == 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  return detail::with_ops(ring, [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    std::vector<T> acc(prec, ops.zero());
    std::vector<T> pochhammer(prec, ops.zero());  // 1 / ((1-q)(1-q^3)...(1-q^{2n+1}))^2
    pochhammer[0] = ops.one();
    for (std::size_t n = 0; 2 * n * n + 2 * n < prec; ++n) {
      const std::size_t lead = 2 * n * n + 2 * n;
      pochhammer.resize(prec - lead);
      const SparseTerms one_minus{{2 * n + 1, -1}};
      detail::divide_sparse(ops, pochhammer, one_minus);
      detail::divide_sparse(ops, pochhammer, one_minus);
      for (std::size_t i = 0; i < pochhammer.size(); ++i) ops.add_to(acc[lead + i], pochhammer[i]);
    }
    return detail::make_series(ops, Rational(0), std::move(acc));
  });
}

int theta_exponent_scale(int index) {
  switch (index) {
    case 0:
    case 2: return 2;
    case 1: return 1;
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "theta index must be 0, 1 or 2");
}

QSeries theta_g(int index, std::size_t prec) {
  theta_exponent_scale(index);
  if (prec == 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  std::vector<Rational> c(prec, Rational(0));
  // Run n over both signs; slot = exponent - offset is 3n^2+2n for g0, g2 (in
  // the doubled variable) and (3n^2+n)/2 for g1.
  const auto n_max = static_cast<std::int64_t>(prec) + 1;
  for (std::int64_t n = -n_max; n <= n_max; ++n) {
    std::int64_t slot = 0;
    Rational coeff;
    if (index == 1) {
      slot = (3 * n * n + n) / 2;
      coeff = -(Rational(n) + Rational(1, 6));
    } else {
      slot = 3 * n * n + 2 * n;
      coeff = Rational(n) + Rational(1, 3);
      if (index == 0 && n % 2 != 0) coeff = -coeff;
    }
    if (slot >= 0 && slot < static_cast<std::int64_t>(prec)) c[static_cast<std::size_t>(slot)] += coeff;
  }
  const Rational offset = index == 1 ? Rational(1, 24) : Rational(1, 3);
  return QSeries(offset, std::move(c));
}

QSeries build_series(const SeriesCatalogEntry& entry, std::size_t prec, const CoefficientRing& ring) {
  if (const auto* spec = std::get_if<EtaQuotientSpec>(&entry.spec)) return eta_quotient(*spec, prec, ring);
  switch (std::get<Builtin>(entry.spec)) {
    case Builtin::MockF: return mock_f(prec, ring);
    case Builtin::MockOmega: return mock_omega(prec, ring);
    case Builtin::ThetaG0: return theta_g(0, prec);
    case Builtin::ThetaG1: return theta_g(1, prec);
    case Builtin::ThetaG2: return theta_g(2, prec);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown builtin");
}

// ---- oracles ---------------------------------------------------------------

namespace {

void check_oracle_input(std::int64_t n, std::int64_t bound) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "oracle input must be nonnegative");
  if (n > bound) {
    throw Error(ErrorCode::OracleBoundExceeded, std::to_string(n) + " exceeds oracle bound " + std::to_string(bound));
  }
}

// Calls visit(largest, parts) for every partition of n; parts listed non-increasing.
template <class Visit>
void for_each_partition(std::int64_t remaining, std::int64_t max_part, std::int64_t largest, std::int64_t parts,
                        Visit& visit) {
  if (remaining == 0) {
    visit(largest, parts);
    return;
  }
  for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
    for_each_partition(remaining - p, p, largest == 0 ? p : largest, parts + 1, visit);
  }
}

// Multisets of odd numbers 2k+1 with k + 1 <= cap summing to remaining.
std::int64_t count_pair_multisets(std::int64_t remaining, std::int64_t max_k) {
  if (remaining == 0) return 1;
  std::int64_t total = 0;
  for (std::int64_t k = std::min(max_k, (remaining - 1) / 2); k >= 0; --k) {
    total += count_pair_multisets(remaining - (2 * k + 1), k);
  }
  return total;
}

}  // namespace

std::int64_t rank_diff_oracle(std::int64_t n, std::int64_t bound) {
  check_oracle_input(n, bound);
  std::int64_t diff = 0;
  auto visit = [&](std::int64_t largest, std::int64_t parts) { diff += (largest - parts) % 2 == 0 ? 1 : -1; };
  for_each_partition(n, n, 0, 0, visit);
  return diff;
}

std::int64_t omega_partition_oracle(std::int64_t n, std::int64_t bound) {
  check_oracle_input(n, bound);
  const std::int64_t total = n + 1;
  std::int64_t count = 0;
  for (std::int64_t largest = 1; largest <= total; ++largest) {
    count += count_pair_multisets(total - largest, largest - 1);
  }
  return count;
}

std::int64_t partition_count_oracle(std::int64_t n, std::int64_t bound) {
  check_oracle_input(n, bound);
  std::int64_t count = 0;
  auto visit = [&](std::int64_t, std::int64_t) { ++count; };
  for_each_partition(n, n, 0, 0, visit);
  return count;
}

}  // namespace mockcong
