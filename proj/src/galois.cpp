#include "ikdeg/galois.hpp"

#include "ikdeg/error.hpp"

#include <algorithm>

namespace ikdeg {

namespace {

void require_prime_conductor(const CycInt& z) {
  if (!is_prime(z.conductor()))
    throw Error(Errc::WrongConductor, "expected a prime conductor, got " + std::to_string(z.conductor()));
}

}  // namespace

OrbitReport conjugate_set(const CycInt& z) {
  require_prime_conductor(z);
  const std::int64_t p = z.conductor();
  OrbitReport report;
  report.base = z;
  std::vector<std::vector<BigInt>> forms;
  for (std::int64_t a = 1; a < std::max<std::int64_t>(p, 2); ++a) {
    report.conjugates.push_back(galois_apply(z, a));
    forms.push_back(report.conjugates.back().canonical_coeffs());
  }
  std::sort(forms.begin(), forms.end());
  report.distinct_count = std::unique(forms.begin(), forms.end()) - forms.begin();
  report.stabilizer_order = static_cast<std::int64_t>(report.conjugates.size()) / report.distinct_count;
  return report;
}

std::int64_t degree_of(const CycInt& z) { return conjugate_set(z).distinct_count; }

IntPoly min_poly(const CycInt& z) {
  const OrbitReport orbit = conjugate_set(z);
  const std::int64_t p = z.conductor();

  std::vector<CycInt> roots;
  for (const auto& c : orbit.conjugates)
    if (std::none_of(roots.begin(), roots.end(), [&](const CycInt& r) { return r == c; })) roots.push_back(c);

  // Coefficients in Z[zeta_p][x], ascending.
  std::vector<CycInt> poly{CycInt::constant(p, 1)};
  for (const auto& r : roots) {
    std::vector<CycInt> next(poly.size() + 1, CycInt(p));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * r;
    }
    poly = std::move(next);
  }

  std::vector<BigInt> coeffs;
  for (const auto& c : poly) {
    auto v = c.as_integer();
    if (!v) throw Error(Errc::NonIntegerCoefficients, "orbit product has a non-rational coefficient");
    coeffs.push_back(*v);
  }
  IntPoly result(std::move(coeffs));

  CycInt value(p);
  for (std::size_t i = result.coeffs().size(); i-- > 0;)
    value = value * z + CycInt::constant(p, result.coeffs()[i]);
  if (!value.is_zero()) throw Error(Errc::NonIntegerCoefficients, "minimal polynomial does not vanish at z");
  return result;
}

bool equivariance_check(const InvertedKloostermanFormula& formula, const FieldElt& b, std::int64_t a) {
  const Field& f = formula.field();
  if (b.is_zero()) throw Error(Errc::ZeroParameter, "b must be nonzero");
  if (a < 1 || a >= std::max<std::int64_t>(f.p(), 2))
    throw Error(Errc::InvalidParameters, "a must lie in [1, p-1]");
  const FieldElt lifted = f.from_int(a);
  const FieldElt moved = b * lifted.pow(-static_cast<std::int64_t>(formula.n() + 1));
  const CycInt lhs = galois_apply(formula.evaluate(b).value, a);
  const CycInt rhs = formula.evaluate(moved).value;
  return lhs == rhs;
}

bool equivariance_check(const FieldPtr& field, int n, const FieldElt& b, std::int64_t a) {
  InvertedKloostermanFormula formula(std::make_shared<GaussSumTable>(field), n);
  return equivariance_check(formula, b, a);
}

std::int64_t predicted_degree(std::int64_t p, int n) { return (p - 1) / gcd(n + 1, p - 1); }

}  // namespace ikdeg
