#include "ikdeg/verify.hpp"

#include "ikdeg/error.hpp"
#include "ikdeg/galois.hpp"
#include "ikdeg/padic.hpp"
#include "ikdeg/parallel.hpp"

#include <cmath>
#include <sstream>

namespace ikdeg {

void SuiteOutcome::merge(const SuiteOutcome& other) {
  checks += other.checks;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

std::string tag(const char* suite, std::int64_t p, int k, int n, const std::string& b) {
  std::ostringstream out;
  out << suite << " p=" << p;
  if (k != 1) out << " k=" << k;
  out << " n=" << n << " b=" << b;
  return out.str();
}

bool within_budget(std::int64_t q, int n, std::int64_t budget) {
  return std::pow(static_cast<long double>(q - 1), n) <= static_cast<long double>(budget);
}

void check_bounds(SuiteOutcome& out, const Field& field, int n, const SumValue& value, const std::string& where,
                  double slack) {
  ++out.checks;
  const BoundReport report = bounds_check(field, n, value);
  if (report.holds(slack)) return;
  std::ostringstream msg;
  msg << where << ": bound violated (lhs1=" << report.max_lhs1() << " rhs1=" << report.rhs1();
  if (report.second_applicable) msg << " lhs2=" << *report.max_lhs2() << " rhs2=" << *report.rhs2();
  msg << ")";
  out.fail(msg.str());
}

}  // namespace

SuiteOutcome verify_identity(const VerifyGrid& grid, std::int64_t budget) {
  SuiteOutcome out{"identity"};
  for (std::int64_t p : grid.primes) {
    const FieldPtr field = Field::create(p, 1);
    auto gauss = std::make_shared<GaussSumTable>(field);
    const BigInt scale = BigInt(field->q()) * (field->q() - 1);
    for (int n : grid.ns) {
      if (!within_budget(field->q(), n, budget)) continue;
      InvertedKloostermanFormula formula(gauss, n);
      for (std::int64_t j = 0; j < field->q() - 1; ++j) {
        const FieldElt b = field->exp(j);
        ++out.checks;
        const SumValue brute = inverted_kloosterman_brute(*field, n, b, budget);
        const SumValue exact = formula.evaluate(b);
        if (!(brute.value * scale == exact.value))
          out.fail(tag("identity", p, 1, n, b.to_string()) + ": q(q-1)*brute " + to_json(brute.value * scale) +
                   " != formula " + to_json(exact.value));
      }
    }
  }
  return out;
}

SuiteOutcome verify_degree(const VerifyGrid& grid, int threads) {
  std::vector<SuiteOutcome> per_prime(grid.primes.size());
  parallel_for(grid.primes.size(), threads, [&](std::size_t i) {
    const std::int64_t p = grid.primes[i];
    SuiteOutcome& out = per_prime[i];
    const FieldPtr field = Field::create(p, 1);
    auto gauss = std::make_shared<GaussSumTable>(field);
    for (int n : grid.ns) {
      InvertedKloostermanFormula formula(gauss, n);
      const std::int64_t expected = predicted_degree(p, n);
      for (std::int64_t j = 0; j < p - 1; ++j) {
        const FieldElt b = field->exp(j);
        ++out.checks;
        const std::int64_t degree = degree_of(formula.evaluate(b).value);
        if (degree != expected)
          out.fail(tag("degree", p, 1, n, b.to_string()) + ": degree " + std::to_string(degree) + " != " +
                   std::to_string(expected));
      }
    }
  });
  SuiteOutcome out{"degree"};
  for (const auto& o : per_prime) out.merge(o);
  return out;
}

SuiteOutcome verify_extension_divisibility(const std::vector<FieldSpec>& fields, const std::vector<int>& ns) {
  SuiteOutcome out{"extension-divisibility"};
  for (const auto& spec : fields) {
    const FieldPtr field = Field::create(spec.p, spec.k);
    auto gauss = std::make_shared<GaussSumTable>(field);
    for (int n : ns) {
      InvertedKloostermanFormula formula(gauss, n);
      const std::int64_t bound = predicted_degree(spec.p, n);
      for (std::int64_t j = 0; j < field->q() - 1; ++j) {
        const FieldElt b = field->exp(j);
        ++out.checks;
        const std::int64_t degree = degree_of(formula.evaluate(b).value);
        if (bound % degree != 0)
          out.fail(tag("divisibility", spec.p, spec.k, n, b.to_string()) + ": degree " + std::to_string(degree) +
                   " does not divide " + std::to_string(bound));
      }
    }
  }
  return out;
}

SuiteOutcome verify_bounds(const VerifyGrid& identity_grid, const VerifyGrid& degree_grid,
                           const std::vector<FieldSpec>& extension_fields, const std::vector<int>& extension_ns,
                           std::int64_t budget, double slack) {
  SuiteOutcome out{"bounds"};
  for (std::int64_t p : identity_grid.primes) {
    const FieldPtr field = Field::create(p, 1);
    for (int n : identity_grid.ns) {
      if (!within_budget(field->q(), n, budget)) continue;
      for (std::int64_t j = 0; j < field->q() - 1; ++j) {
        const FieldElt b = field->exp(j);
        check_bounds(out, *field, n, inverted_kloosterman_brute(*field, n, b, budget),
                     tag("bounds/brute", p, 1, n, b.to_string()), slack);
      }
    }
  }
  auto sweep = [&](std::int64_t p, int k, const std::vector<int>& ns) {
    const FieldPtr field = Field::create(p, k);
    auto gauss = std::make_shared<GaussSumTable>(field);
    for (int n : ns) {
      InvertedKloostermanFormula formula(gauss, n);
      for (std::int64_t j = 0; j < field->q() - 1; ++j) {
        const FieldElt b = field->exp(j);
        check_bounds(out, *field, n, formula.evaluate(b), tag("bounds/formula", p, k, n, b.to_string()), slack);
      }
    }
  };
  for (std::int64_t p : degree_grid.primes) sweep(p, 1, degree_grid.ns);
  for (const auto& spec : extension_fields) sweep(spec.p, spec.k, extension_ns);
  return out;
}

SuiteOutcome verify_stickelberger(const std::vector<std::int64_t>& primes, int precision) {
  SuiteOutcome out{"stickelberger"};
  for (std::int64_t p : primes) {
    const FieldPtr field = Field::create(p, 1);
    GaussSumTable gauss(field);
    CyclotomicEmbedding embed(p, precision > 0 ? precision : default_precision(p));
    for (std::int64_t m = 0; m <= p - 2; ++m) {
      ++out.checks;
      try {
        const auto r = stickelberger_check(gauss, embed, m);
        if (!r.ok)
          out.fail("stickelberger p=" + std::to_string(p) + " m=" + std::to_string(m) + ": observed " +
                   std::to_string(r.observed) + " != " + std::to_string(r.predicted));
      } catch (const Error& e) {
        out.fail("stickelberger p=" + std::to_string(p) + " m=" + std::to_string(m) + ": " + e.what());
      }
    }
  }
  return out;
}

SuiteOutcome verify_cases(const std::vector<std::pair<std::int64_t, int>>& pairs, int precision,
                          bool require_p_coprime_to_n1) {
  SuiteOutcome out{"cases"};
  for (const auto& [p, n] : pairs) {
    if (require_p_coprime_to_n1 && (n + 1) % p == 0) continue;
    CaseAnalyzer analyzer(p, n, precision);
    for (std::int64_t b = 1; b < p; ++b) {
      for (std::int64_t a = 1; a < p; ++a) {
        ++out.checks;
        const std::string where = "cases p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                  " b=" + std::to_string(b) + " a=" + std::to_string(a);
        try {
          const CaseReport r = analyzer.analyze(b, a);
          if (r.ok()) continue;
          if (r.label == CaseLabel::Trivial || r.label == CaseLabel::Stabilized)
            out.fail(where + ": difference is not exactly zero");
          else
            out.fail(where + " case " + to_string(r.label) + ": observed " +
                     (r.observed_valuation ? std::to_string(*r.observed_valuation) : "?") + " != predicted " +
                     (r.predicted_valuation ? std::to_string(*r.predicted_valuation) : "?"));
        } catch (const Error& e) {
          out.fail(where + ": " + e.what());
        }
      }
    }
  }
  return out;
}

VerifyGrid default_identity_grid() { return {{3, 5, 7, 11, 13}, {1, 2, 3}}; }

VerifyGrid default_degree_grid() { return {primes_in_range(2, 31), {1, 2, 3, 4, 5, 6, 7, 8}}; }

std::vector<FieldSpec> default_extension_fields() { return {{2, 2}, {3, 2}, {5, 2}, {2, 3}, {3, 3}}; }

std::vector<int> default_extension_ns() { return {1, 2}; }

std::vector<std::int64_t> default_stickelberger_primes() { return {3, 5, 7, 11, 13, 17, 19}; }

std::vector<std::pair<std::int64_t, int>> default_case_pairs_i() { return {{7, 1}, {11, 1}, {11, 3}, {13, 1}, {13, 3}}; }

std::vector<std::pair<std::int64_t, int>> default_case_pairs_ii() { return {{5, 5}, {7, 7}}; }

std::vector<std::pair<std::int64_t, int>> default_case_pairs_iii() { return {{3, 6}, {5, 13}}; }

}  // namespace ikdeg
