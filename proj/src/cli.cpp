#include "mockcong/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mockcong/identities.hpp"
#include "mockcong/scanner.hpp"
#include "mockcong/transform.hpp"

namespace mockcong {

namespace {

using Json = nlohmann::ordered_json;

std::string rational_text(Rational x) {
  x.canonicalize();
  return x.get_str();
}

Rational parse_rational(const std::string& text) {
  Rational x;
  if (x.set_str(text, 10) != 0) throw Error(ErrorCode::InvalidArgument, "bad rational '" + text + "'");
  x.canonicalize();
  return x;
}

std::string ring_text(const CoefficientRing& ring) {
  switch (ring.kind()) {
    case CoefficientRing::Kind::Integer: return "integer";
    case CoefficientRing::Kind::Rational: return "rational";
    case CoefficientRing::Kind::IntegerMod: break;
  }
  return "mod " + std::to_string(ring.modulus());
}

CoefficientRing parse_ring(const std::string& text) {
  if (text == "integer") return CoefficientRing::integer();
  if (text == "rational") return CoefficientRing::rational();
  if (text.rfind("mod ", 0) == 0) return CoefficientRing::modulo(std::stoull(text.substr(4)));
  throw Error(ErrorCode::InvalidArgument, "unknown ring '" + text + "'");
}

std::string canonical_name(const std::string& specifier) { return resolve_series(specifier).name; }

std::optional<std::filesystem::path> cache_dir_from(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* env = std::getenv(kCacheEnvVar); env != nullptr && *env != '\0') return std::filesystem::path(env);
  return std::nullopt;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& name, const CoefficientRing& ring,
                                 std::size_t limit) {
  std::string stem = "expand_";
  for (const char ch : name + "_" + ring_text(ring)) stem += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return dir / (stem + "_" + std::to_string(limit) + ".json");
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::GrammarError:
    case ErrorCode::IncompatibleModulus:
    case ErrorCode::RingMismatch:
      return kExitGrammar;
    case ErrorCode::UnknownSeries:
      return kExitUnknownSeries;
    case ErrorCode::InsufficientPrecision:
      return kExitBudget;
    default:
      return kExitUsage;
  }
}

std::optional<CoefficientRing> ring_for_modulus(std::int64_t modulus) {
  if (modulus == 0) return std::nullopt;
  if (modulus < 2) throw Error(ErrorCode::InvalidArgument, "--mod must be at least 2");
  return CoefficientRing::modulo(static_cast<std::uint64_t>(modulus));
}

void write_expand_csv(std::ostream& out, const QSeries& series) {
  out << "n,exponent,coefficient\n";
  for (std::size_t n = 0; n < series.prec(); ++n) {
    out << n << "," << rational_text(series.offset() + Rational(static_cast<unsigned long>(n))) << ","
        << rational_text(series.slot(n)) << "\n";
  }
}

Progression parse_progression(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--progression expects m:t");
  const std::int64_t m = std::stoll(text.substr(0, colon));
  const std::int64_t t = std::stoll(text.substr(colon + 1));
  if (m < 1 || t < 0 || t >= m) throw Error(ErrorCode::InvalidArgument, "--progression needs m >= 1 and 0 <= t < m");
  return {m, t};
}

Json applicability_json(const Applicability& a) {
  return Json{{"applies", a.applies}, {"reasons", a.reasons}};
}

}  // namespace

SeriesCatalogEntry resolve_series(const std::string& specifier) {
  if (specifier.find('^') != std::string::npos || (!specifier.empty() && std::isdigit(static_cast<unsigned char>(specifier[0])))) {
    auto spec = parse_eta_quotient(specifier);
    const std::string name = spec.to_string();
    return {name, std::move(spec), "inline eta-quotient"};
  }
  return find_series(specifier);
}

std::string series_to_json(const std::string& specifier, const QSeries& series) {
  Json coeffs = Json::array();
  for (std::size_t n = 0; n < series.prec(); ++n) {
    const Rational v = series.slot(n);
    if (v.get_den() == 1 && v.get_num().fits_slong_p()) {
      coeffs.push_back(v.get_num().get_si());
    } else {
      coeffs.push_back(rational_text(v));
    }
  }
  Json doc{{"series", specifier},
           {"ring", ring_text(series.ring())},
           {"limit", series.prec()},
           {"offset", rational_text(series.offset())},
           {"coeffs", std::move(coeffs)}};
  return doc.dump();
}

QSeries series_from_json(const std::string& text) {
  try {
    const auto doc = Json::parse(text);
    const auto ring = parse_ring(doc.at("ring").get<std::string>());
    const Rational offset = parse_rational(doc.at("offset").get<std::string>());
    std::vector<Rational> values;
    for (const auto& c : doc.at("coeffs")) {
      values.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
    }
    if (values.size() != doc.at("limit").get<std::size_t>()) {
      throw Error(ErrorCode::InvalidArgument, "coefficient count does not match limit");
    }
    switch (ring.kind()) {
      case CoefficientRing::Kind::Rational: return QSeries(offset, std::move(values));
      case CoefficientRing::Kind::Integer: {
        QSeries::IntegerCoeffs ints;
        for (const auto& v : values) {
          if (v.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "non-integral coefficient");
          ints.push_back(v.get_num());
        }
        return QSeries(offset, std::move(ints));
      }
      case CoefficientRing::Kind::IntegerMod: {
        QSeries::ResidueCoeffs residues;
        for (const auto& v : values) {
          if (v.get_den() != 1 || v.get_num() < 0) throw Error(ErrorCode::InvalidArgument, "bad residue");
          residues.push_back(v.get_num().get_ui());
        }
        return QSeries(offset, ring.modulus(), std::move(residues));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed series document: ") + e.what());
  }
  throw Error(ErrorCode::InvalidArgument, "malformed series document");
}

QSeries expand_cached(const std::string& specifier, std::size_t limit, const CoefficientRing& ring,
                      const std::optional<std::filesystem::path>& cache_dir) {
  const auto entry = resolve_series(specifier);
  if (!cache_dir) return build_series(entry, limit, ring);
  const auto path = cache_file(*cache_dir, entry.name, ring, limit);
  if (std::ifstream in(path); in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      const auto doc = Json::parse(buffer.str());
      if (doc.at("series") == entry.name && doc.at("ring") == ring_text(ring) && doc.at("limit") == limit) {
        return series_from_json(buffer.str());
      }
    } catch (const std::exception&) {
      // unreadable entries are rebuilt and overwritten
    }
  }
  QSeries series = build_series(entry, limit, ring);
  std::error_code ec;
  std::filesystem::create_directories(*cache_dir, ec);
  if (std::ofstream out(path); out) out << series_to_json(entry.name, series);
  return series;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mock theta and eta-quotient coefficients, multiplier identities, congruence scans", "mockcong"};
  app.require_subcommand(1);

  std::string specifier;
  std::string format = "json";
  std::string cache_flag;
  std::int64_t limit = 0;
  std::int64_t modulus = 0;
  std::int64_t m_max = 0;
  std::int64_t budget = kDefaultBudget;
  std::string progression_text;
  SuiteOptions suite_options;
  bool negative_control = false;
  std::string cusp_kind;
  std::int64_t q = 0;
  std::optional<std::int64_t> cusp_t;
  std::int64_t ell = 0;
  std::int64_t m = 0;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* expand = app.add_subcommand("expand", "Print the first coefficients of a series");
  expand->add_option("series", specifier, "Catalog name or eta-quotient such as 1^-4,2^5,4^-2")->required();
  expand->add_option("--limit", limit, "Number of coefficients")->required()->check(CLI::PositiveNumber);
  expand->add_option("--mod", modulus, "Reduce coefficients modulo this integer");
  expand->add_option("--cache-dir", cache_flag, "Coefficient cache directory");
  add_format(expand);

  auto* scan_cmd = app.add_subcommand("scan", "Search progressions mn+t for vanishing mod a prime");
  scan_cmd->add_option("series", specifier, "Catalog name or eta-quotient")->required();
  scan_cmd->add_option("--mod", modulus, "Prime modulus")->required();
  scan_cmd->add_option("--m-max", m_max, "Largest progression modulus");
  scan_cmd->add_option("--budget", budget, "Number of coefficients to compute");
  scan_cmd->add_option("--progression", progression_text, "Scan a single progression m:t");
  scan_cmd->add_option("--cache-dir", cache_flag, "Coefficient cache directory");
  add_format(scan_cmd);

  auto* identities = app.add_subcommand("identities", "Run the seeded multiplier identity suites");
  identities->add_option("--seed", suite_options.seed, "Random seed");
  identities->add_option("--trials", suite_options.trials, "Random instances per suite")->check(CLI::PositiveNumber);
  identities->add_flag("--negative-control", negative_control, "Run the deliberately corrupted identity instead");

  auto* cusp = app.add_subcommand("cusp-check", "Check the 24Q-th power of a cusp leading term");
  cusp->add_option("kind", cusp_kind, "f or omega")->required()->check(CLI::IsMember({"f", "omega"}));
  cusp->add_option("--Q", q, "Modulus Q")->required();
  cusp->add_option("--t", cusp_t, "Residue t (default: every good t)");

  auto* info = app.add_subcommand("info", "Report invariants and corollary hypotheses of an eta-quotient");
  info->add_option("series", specifier, "Catalog name or eta-quotient")->required();
  info->add_option("--ell", ell, "Prime 2 or 3")->required();
  info->add_option("--m", m, "Progression modulus")->required()->check(CLI::PositiveNumber);

  auto* known = app.add_subcommand("known", "Check the built-in known congruences and parity statements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*expand) {
      const auto ring = ring_for_modulus(modulus).value_or(CoefficientRing::integer());
      const auto series =
          expand_cached(specifier, static_cast<std::size_t>(limit), ring, cache_dir_from(cache_flag));
      if (format == "csv") {
        write_expand_csv(out, series);
      } else {
        out << series_to_json(canonical_name(specifier), series) << "\n";
      }
      return kExitOk;
    }

    if (*scan_cmd) {
      if (!is_prime(modulus)) throw Error(ErrorCode::InvalidArgument, "--mod must be prime");
      std::optional<Progression> single;
      if (!progression_text.empty()) single = parse_progression(progression_text);
      const std::int64_t needed = single ? single->t + 1 : m_max;
      if (!single && m_max < 1) throw Error(ErrorCode::InvalidArgument, "--m-max or --progression is required");
      if (budget < needed || budget < 1) {
        err << "budget " << budget << " does not cover the requested progressions\n";
        return kExitBudget;
      }
      const auto ring = CoefficientRing::modulo(static_cast<std::uint64_t>(modulus));
      const auto series = expand_cached(specifier, static_cast<std::size_t>(budget), ring, cache_dir_from(cache_flag));
      ScanReport report;
      if (single) {
        const std::int64_t n_max = (budget - 1 - single->t) / single->m;
        const auto w = witness(series, static_cast<std::uint64_t>(modulus), *single, n_max);
        report = {canonical_name(specifier), static_cast<std::uint64_t>(modulus), single->m, budget, {}};
        if (w) {
          const auto value = series.residues()[static_cast<std::size_t>(single->m * *w + single->t)];
          report.verdicts.push_back({*single, Witness{*w, value}});
        } else {
          report.verdicts.push_back({*single, Candidate{n_max}});
        }
      } else {
        report = scan(series, static_cast<std::uint64_t>(modulus), m_max, canonical_name(specifier));
      }
      out << (format == "csv" ? to_csv(report) : to_json(report) + "\n");
      return kExitOk;
    }

    if (*identities) {
      const auto results = negative_control ? std::vector<SuiteResult>{run_negative_control(suite_options)}
                                            : run_identity_suites(suite_options);
      bool all_ok = true;
      for (const auto& r : results) {
        out << r.name << " " << r.passed << "/" << r.total << (r.ok() ? " ok" : " FAIL") << "\n";
        if (!r.ok()) {
          all_ok = false;
          for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) out << "  failing instance: " << r.failures[i] << "\n";
        }
      }
      out << "seed " << suite_options.seed << ", trials " << suite_options.trials << "\n";
      return all_ok ? kExitOk : kExitIdentity;
    }

    if (*cusp) {
      const bool f_kind = cusp_kind == "f";
      if (q < 1 || std::gcd(q, std::int64_t{f_kind ? 6 : 3}) != 1) {
        err << "Q must be positive and coprime to " << (f_kind ? 6 : 3) << "\n";
        return kExitUsage;
      }
      const auto kind = f_kind ? TransformKind::f() : TransformKind::omega();
      std::vector<std::int64_t> residues;
      if (cusp_t) {
        residues.push_back(floor_mod(*cusp_t, q));
      } else {
        for (std::int64_t t = 0; t < q; ++t) {
          if (q == 1 || is_good(Progression{q, t}, kind)) residues.push_back(t);
        }
      }
      // 24Q-th power of the leading term: Q^{-12Q} (f) or (-1)^Q (2Q)^{-12Q} (omega)
      const ExactScalar expected =
          f_kind ? scalar_pow(ExactScalar::from_rational(Rational(static_cast<long>(q))), -12 * q)
                 : ExactScalar::from_rational(Rational(q % 2 == 0 ? 1 : -1)) *
                       scalar_pow(ExactScalar::from_rational(Rational(static_cast<long>(2 * q))), -12 * q);
      bool all_ok = true;
      for (const std::int64_t t : residues) {
        const ExactScalar lead = f_kind ? cusp12_leading(q, t) : cusp13_leading(q, t);
        const bool ok = scalar_pow(lead, 24 * q) == expected;
        all_ok = all_ok && ok;
        out << cusp_kind << " Q=" << q << " t=" << t << " leading=" << lead.to_string() << (ok ? " ok" : " FAIL")
            << "\n";
      }
      return all_ok ? kExitOk : kExitCusp;
    }

    if (*info) {
      const auto entry = resolve_series(specifier);
      const auto* spec = std::get_if<EtaQuotientSpec>(&entry.spec);
      if (spec == nullptr) {
        err << entry.name << " is not an eta-quotient\n";
        return kExitGrammar;
      }
      const auto details = eta_info(*spec, ell, m);
      Json doc{{"series", entry.name},
               {"eta_quotient", spec->to_string()},
               {"B", details.b},
               {"k", rational_text(Rational(details.k_twice, 2))},
               {"level", details.level},
               {"pole_at_infinity", details.pole_at_infinity},
               {"ell", ell},
               {"m", m}};
      doc["q_divisor"] = details.q_divisor ? Json(*details.q_divisor) : Json(nullptr);
      doc["stripped_level"] = details.stripped_level;
      doc["quotient_k"] = rational_text(Rational(details.quotient_k_twice, 2));
      doc["newman_congruence"] = details.newman_congruence;
      doc["applicability"] = applicability_json(details.applicability);
      out << doc.dump(2) << "\n";
      return kExitOk;
    }

    if (*known) {
      bool all_ok = true;
      for (const auto& claim : verify_known()) {
        all_ok = all_ok && claim.passed;
        out << claim.id << " " << (claim.passed ? "pass" : "FAIL") << " " << claim.detail << "\n";
      }
      return all_ok ? kExitOk : kExitIdentity;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("mockcong");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mockcong
