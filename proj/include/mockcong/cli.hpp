#pragma once

// Command-line front end. Exit codes: 0 ok, 1 usage, 2 grammar or non-integral
// series, 3 unknown catalog name, 4 insufficient budget, 5 identity failure,
// 6 cusp identity failure.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mockcong/generators.hpp"

namespace mockcong {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitGrammar = 2,
  kExitUnknownSeries = 3,
  kExitBudget = 4,
  kExitIdentity = 5,
  kExitCusp = 6,
};

inline constexpr const char* kCacheEnvVar = "MOCKCONG_CACHE_DIR";

/// A catalog name or an inline eta-quotient such as "1^-4,2^5,4^-2".
SeriesCatalogEntry resolve_series(const std::string& specifier);

/// The JSON expand document: series, ring, limit, offset, coeffs.
std::string series_to_json(const std::string& specifier, const QSeries& series);
/// Inverse of series_to_json; throws InvalidArgument on malformed input.
QSeries series_from_json(const std::string& text);

/// Expands through the cache directory when one is given; entries are keyed by
/// (specifier, ring, limit) and checked against their recorded key on load.
QSeries expand_cached(const std::string& specifier, std::size_t limit, const CoefficientRing& ring,
                      const std::optional<std::filesystem::path>& cache_dir);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace mockcong
