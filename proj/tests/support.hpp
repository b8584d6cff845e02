#pragma once

// Shared helpers for the unit, property and acceptance tests: fixed-seed
// generators and oracles that do not go through the library's algebra.

#include "ikdeg/charsum.hpp"
#include "ikdeg/cyclo.hpp"
#include "ikdeg/ff.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace ikdeg::fixtures {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  FieldElt element(const Field& f) { return f.element(static_cast<std::uint32_t>(range(0, f.q() - 1))); }
  FieldElt nonzero(const Field& f) { return f.element(static_cast<std::uint32_t>(range(1, f.q() - 1))); }

  /// A sparse cyclotomic integer with small coefficients.
  CycInt cycint(std::int64_t m, int terms = 4, std::int64_t span = 5) {
    CycInt z(m);
    for (int i = 0; i < terms; ++i) z.add_term(range(0, m - 1), BigInt(range(-span, span)));
    return z;
  }

  std::int64_t coprime_to(std::int64_t m) {
    for (;;) {
      const std::int64_t a = range(1, m - 1 > 0 ? m - 1 : 1);
      if (std::gcd(a, m) == 1) return a;
    }
  }

 private:
  std::mt19937_64 rng_;
};

/// The trace of x computed as x + x^p + ... + x^(p^(k-1)) through field
/// multiplication only, read off as the constant coordinate.
inline std::int64_t trace_by_frobenius(const FieldElt& x) {
  const Field& f = x.field();
  FieldElt acc = f.zero(), y = x;
  for (int i = 0; i < f.k(); ++i) {
    acc = acc + y;
    y = y.pow(f.p());
  }
  return acc.coords().front();
}

/// IK_n(q, b) as a complex number: exp(2 pi i j Tr(1/(x_1 + ... + x_(n+1))) / p)
/// summed over (x_1, ..., x_(n+1)) with product b and nonzero sum; traces from
/// trace_by_frobenius.
inline std::complex<double> ik_numeric(const Field& f, int n, const FieldElt& b, std::int64_t j = 1) {
  std::vector<FieldElt> units;
  for (std::int64_t c = 1; c < f.q(); ++c) units.push_back(f.element(static_cast<std::uint32_t>(c)));
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  std::complex<double> total = 0;
  const double unit_angle = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(f.p());
  for (;;) {
    FieldElt prod = f.one(), sum = f.zero();
    for (std::size_t i : idx) {
      prod = prod * units[i];
      sum = sum + units[i];
    }
    sum = sum + b / prod;
    if (!sum.is_zero())
      total += std::polar(1.0, unit_angle * static_cast<double>(trace_by_frobenius(sum.inv())));
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == units.size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return total;
}

/// Number of distinct complex conjugates of an element of Q(zeta_p), given
/// the complex value at every embedding j = 1..p-1.
inline std::int64_t distinct_numeric(const std::vector<std::complex<double>>& values, double tol = 1e-6) {
  std::vector<std::complex<double>> seen;
  for (const auto& v : values) {
    bool found = false;
    for (const auto& s : seen)
      if (std::abs(s - v) < tol) found = true;
    if (!found) seen.push_back(v);
  }
  return static_cast<std::int64_t>(seen.size());
}

}  // namespace ikdeg::fixtures
