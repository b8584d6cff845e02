#pragma once

// Parameter sweeps over (q, n, b) and their CSV / JSON / table renderings.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ikdeg {

struct CensusRecord {
  std::int64_t p = 0;
  int k_ext = 1;
  std::int64_t q = 0;
  int n = 0;
  std::string b;
  std::int64_t b_dlog = 0;
  std::int64_t degree = 0;
  std::int64_t predicted_degree_bound = 0;
  std::optional<bool> degree_matches;  // empty: "n/a" (extension fields)
  double bound1_lhs = 0, bound1_rhs = 0;
  std::optional<double> bound2_lhs, bound2_rhs;  // empty when p | n+1
  std::string case_label;
  std::optional<std::int64_t> predicted_val, observed_val;
};

struct CensusParams {
  std::vector<std::int64_t> primes;
  int k_ext = 1;
  std::vector<int> ns;
  /// Restricts the sweep to one element (coordinate string) when set.
  std::optional<std::string> b;
  int precision = 0;
  int threads = 1;
};

/// Rows sorted by (p, k_ext, n, dlog b).
std::vector<CensusRecord> run_census(const CensusParams& params);

/// 12 significant digits, locale independent.
std::string format_decimal(double value);

void write_csv(std::ostream& out, const std::vector<CensusRecord>& rows);
void write_json(std::ostream& out, const std::vector<CensusRecord>& rows);
void write_table(std::ostream& out, const std::vector<CensusRecord>& rows);

}  // namespace ikdeg
