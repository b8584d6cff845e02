#pragma once

// Verification suites behind `ikdeg verify`. Each suite sweeps a parameter
// grid, checks one family of exact identities, and records every failure with
// the parameters needed to reproduce it.

#include "ikdeg/charsum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ikdeg {

struct SuiteOutcome {
  SuiteOutcome() = default;
  explicit SuiteOutcome(std::string suite) : name(std::move(suite)) {}

  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty() && checks > 0; }
  void fail(std::string message) { failures.push_back(std::move(message)); }
  void merge(const SuiteOutcome& other);
};

struct FieldSpec {
  std::int64_t p = 0;
  int k = 1;
};

struct VerifyGrid {
  std::vector<std::int64_t> primes;
  std::vector<int> ns;
};

/// q(q-1) * brute == formula for every b in F_p^*, skipping (p, n) whose
/// enumeration exceeds the budget.
SuiteOutcome verify_identity(const VerifyGrid& grid, std::int64_t budget = kDefaultBudget);

/// degree_of(q(q-1) IK_n(p, b)) == (p-1)/gcd(n+1, p-1) for every b.
SuiteOutcome verify_degree(const VerifyGrid& grid, int threads = 1);

/// degree divides (p-1)/gcd(n+1, p-1) over extension fields.
SuiteOutcome verify_extension_divisibility(const std::vector<FieldSpec>& fields, const std::vector<int>& ns);

/// Both analytic estimates at every embedding for the sums the three suites
/// above compute (brute values where the identity grid enumerates them,
/// formula values everywhere).
SuiteOutcome verify_bounds(const VerifyGrid& identity_grid, const VerifyGrid& degree_grid,
                           const std::vector<FieldSpec>& extension_fields, const std::vector<int>& extension_ns,
                           std::int64_t budget = kDefaultBudget, double slack = 1e-6);

/// v_pi(G(omega^(-m))) == m for 0 <= m <= p-2.
SuiteOutcome verify_stickelberger(const std::vector<std::int64_t>& primes, int precision = 0);

/// Main-term valuation equals its prediction for every nontrivial a and every
/// b; the exact difference vanishes when a^gcd(n+1, p-1) = 1.
SuiteOutcome verify_cases(const std::vector<std::pair<std::int64_t, int>>& pairs, int precision = 0,
                          bool require_p_coprime_to_n1 = false);

/// Default grids.
VerifyGrid default_identity_grid();
VerifyGrid default_degree_grid();
std::vector<FieldSpec> default_extension_fields();
std::vector<int> default_extension_ns();
std::vector<std::int64_t> default_stickelberger_primes();
std::vector<std::pair<std::int64_t, int>> default_case_pairs_i();
std::vector<std::pair<std::int64_t, int>> default_case_pairs_ii();
std::vector<std::pair<std::int64_t, int>> default_case_pairs_iii();

}  // namespace ikdeg
