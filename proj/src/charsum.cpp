#include "ikdeg/charsum.hpp"

#include "ikdeg/error.hpp"

#include <cmath>

namespace ikdeg {

namespace {

void check_sum_args(const Field& field, int n, const FieldElt& b) {
  field.check_member(b);
  if (n < 1) throw Error(Errc::InvalidParameters, "n must be >= 1");
  if (b.is_zero()) throw Error(Errc::ZeroParameter, "b must be nonzero");
}

void check_budget(const Field& field, int n, std::int64_t budget) {
  const auto width = static_cast<long double>(field.q() - 1);
  if (std::pow(width, static_cast<long double>(n)) > static_cast<long double>(budget))
    throw Error(Errc::BudgetExceeded, "(q-1)^n = " + std::to_string(field.q() - 1) + "^" + std::to_string(n) +
                                          " exceeds the enumeration budget " + std::to_string(budget));
}

// Visits every (x_1, ..., x_n) in (F_q^*)^n, passing the code of x_1 + ... + x_n
// and the discrete log of x_1 ... x_n.
template <typename Visit>
void for_each_tuple(const Field& field, int n, Visit&& visit) {
  const auto order = static_cast<std::uint32_t>(field.q() - 1);
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::uint32_t> logs(un, 0);
  // sums[i] / prods[i] cover the first i coordinates.
  std::vector<std::uint32_t> sums(un + 1, 0), prods(un + 1, 0);
  auto refresh_from = [&](std::size_t i) {
    for (std::size_t j = i; j < un; ++j) {
      sums[j + 1] = field.add_code(sums[j], field.exp_code(logs[j]));
      std::uint32_t s = prods[j] + logs[j];
      prods[j + 1] = s >= order ? s - order : s;
    }
  };
  refresh_from(0);
  while (true) {
    visit(sums[un], prods[un]);
    std::size_t i = un;
    while (i > 0) {
      --i;
      if (++logs[i] < order) break;
      logs[i] = 0;
      if (i == 0) return;
    }
    refresh_from(i);
  }
}

CycInt from_counts(std::int64_t conductor, const std::vector<std::int64_t>& counts) {
  std::vector<BigInt> c(counts.begin(), counts.end());
  return CycInt(conductor, std::move(c));
}

}  // namespace

CycInt unscaled(const SumValue& sum) {
  if (sum.scale == 1) return sum.value;
  std::vector<BigInt> c = sum.value.canonical_coeffs();
  for (auto& x : c) {
    if (x % sum.scale != 0) throw Error(Errc::NonIntegerCoefficients, "scaled sum is not divisible by its scale");
    x /= sum.scale;
  }
  return CycInt(sum.value.conductor(), std::move(c));
}

CycInt additive_char(const Field& field, const FieldElt& x) {
  return CycInt::zeta(field.p(), field.trace(x));
}

CycInt mult_char(const CharSpec& chi, const FieldElt& x) {
  const Field& f = chi.field();
  f.check_member(x);
  if (x.is_zero()) throw Error(Errc::CharAtZero, "multiplicative character evaluated at 0");
  return CycInt::zeta(f.q() - 1, -chi.m_index() * f.dlog(x));
}

CycInt gauss_sum(const CharSpec& chi) {
  const Field& f = chi.field();
  const std::int64_t order = f.q() - 1;
  CycInt g(f.p() * order);
  for (std::int64_t j = 0; j < order; ++j) {
    const std::uint32_t x = f.exp_code(j);
    g.add_term(f.p() * mod(-chi.m_index() * j, order) + order * f.trace_code(x), 1);
  }
  return g;
}

GaussSumTable::GaussSumTable(FieldPtr field) : field_(std::move(field)) {
  const std::int64_t order = field_->q() - 1;
  sums_.reserve(static_cast<std::size_t>(order));
  for (std::int64_t m = 0; m < order; ++m) sums_.push_back(gauss_sum(CharSpec(*field_, m)));
}

InvertedKloostermanFormula::InvertedKloostermanFormula(std::shared_ptr<const GaussSumTable> gauss, int n)
    : gauss_(std::move(gauss)), n_(n) {
  if (n < 1) throw Error(Errc::InvalidParameters, "n must be >= 1");
  const Field& f = gauss_->field();
  const std::int64_t p = f.p(), order = f.q() - 1;
  const std::int64_t log_minus_one = f.dlog(-f.one());

  BigInt qm1_pow = 1;
  for (int i = 0; i <= n; ++i) qm1_pow *= order;
  constant_ = -qm1_pow + ((n + 1) % 2 == 0 ? 1 : -1);

  terms_.resize(static_cast<std::size_t>(order), CycInt(gauss_->conductor()));
  for (std::int64_t m = 1; m < order; ++m) {
    const std::int64_t m1 = mod(m * (n + 1), order);
    CycInt t = pow((*gauss_)[m], static_cast<unsigned>(n + 1));
    const CycInt& conj = (*gauss_)[-m1];
    t = t * conj;
    t = t * conj;
    // chi^(n+1)(-1) = zeta_(q-1)^(-m1 dlog(-1))
    terms_[static_cast<std::size_t>(m)] = t.rotated(p * mod(-m1 * log_minus_one, order));
  }
}

CycInt InvertedKloostermanFormula::evaluate_full(const FieldElt& b) const {
  const Field& f = gauss_->field();
  check_sum_args(f, n_, b);
  const std::int64_t p = f.p(), order = f.q() - 1;
  const std::int64_t log_b = f.dlog(b);
  CycInt total = CycInt::constant(gauss_->conductor(), constant_);
  for (std::int64_t m = 1; m < order; ++m)
    total += terms_[static_cast<std::size_t>(m)].rotated(p * mod(m * log_b, order));  // chi^(-1)(b)
  return total;
}

SumValue InvertedKloostermanFormula::evaluate(const FieldElt& b) const {
  const Field& f = gauss_->field();
  return {restrict_conductor(evaluate_full(b), f.p()), BigInt(f.q()) * (f.q() - 1)};
}

SumValue kloosterman_brute(const Field& field, int n, const FieldElt& b, std::int64_t budget) {
  check_sum_args(field, n, b);
  check_budget(field, n, budget);
  const auto log_b = static_cast<std::int64_t>(field.log_code(b.code()));
  std::vector<std::int64_t> counts(static_cast<std::size_t>(field.p()), 0);
  for_each_tuple(field, n, [&](std::uint32_t sum, std::uint32_t log_prod) {
    const std::uint32_t last = field.exp_code(log_b - log_prod);
    ++counts[field.trace_code(field.add_code(sum, last))];
  });
  return {from_counts(field.p(), counts), 1};
}

SumValue inverted_kloosterman_brute(const Field& field, int n, const FieldElt& b, std::int64_t budget) {
  check_sum_args(field, n, b);
  check_budget(field, n, budget);
  const auto log_b = static_cast<std::int64_t>(field.log_code(b.code()));
  std::vector<std::uint32_t> trace_of_inverse(static_cast<std::size_t>(field.q()), 0);
  for (std::uint32_t x = 1; x < static_cast<std::uint32_t>(field.q()); ++x)
    trace_of_inverse[x] = field.trace_code(field.inv_code(x));
  std::vector<std::int64_t> counts(static_cast<std::size_t>(field.p()), 0);
  for_each_tuple(field, n, [&](std::uint32_t sum, std::uint32_t log_prod) {
    const std::uint32_t total = field.add_code(sum, field.exp_code(log_b - log_prod));
    if (total != 0) ++counts[trace_of_inverse[total]];
  });
  return {from_counts(field.p(), counts), 1};
}

SumValue ik_formula_scaled(const FieldPtr& field, int n, const FieldElt& b) {
  check_sum_args(*field, n, b);
  InvertedKloostermanFormula formula(std::make_shared<GaussSumTable>(field), n);
  return formula.evaluate(b);
}

CycInt s1_scaled(const Field& field, int n, std::int64_t budget) {
  if (n < 1) throw Error(Errc::InvalidParameters, "n must be >= 1");
  check_budget(field, n + 1, budget);
  const std::int64_t p = field.p(), order = field.q() - 1;

  CycInt lambda_part(p);
  for (std::int64_t j = 0; j < order; ++j) lambda_part.add_term(field.trace_code(field.inv_code(field.exp_code(j))), 1);

  // sum over (n+1)-tuples and over all characters chi = omega^(-m) of
  // chi(x_1 ... x_(n+1)) = zeta_(q-1)^(-m * log(prod)).
  std::vector<std::int64_t> counts(static_cast<std::size_t>(order), 0);
  for_each_tuple(field, n + 1, [&](std::uint32_t, std::uint32_t log_prod) {
    for (std::int64_t m = 0; m < order; ++m) ++counts[static_cast<std::size_t>(mod(-m * log_prod, order))];
  });
  CycInt char_part = from_counts(order, counts);

  const std::int64_t conductor = p * order;
  return change_conductor(lambda_part, conductor) * change_conductor(char_part, conductor);
}

bool s1_identity_check(const Field& field, int n, std::int64_t budget) {
  BigInt expected = 1;
  for (int i = 0; i <= n; ++i) expected *= field.q() - 1;
  const CycInt lhs = s1_scaled(field, n, budget);
  return lhs == CycInt::constant(lhs.conductor(), -expected);
}

bool BoundReport::holds(double slack) const {
  for (const auto& e : entries) {
    if (e.lhs1 > e.rhs1 + slack) return false;
    if (e.lhs2 && *e.lhs2 > *e.rhs2 + slack) return false;
  }
  return true;
}

double BoundReport::max_lhs1() const {
  double best = 0;
  for (const auto& e : entries) best = std::max(best, e.lhs1);
  return best;
}

std::optional<double> BoundReport::max_lhs2() const {
  if (!second_applicable) return std::nullopt;
  double best = 0;
  for (const auto& e : entries) best = std::max(best, *e.lhs2);
  return best;
}

BoundReport bounds_check(const Field& field, int n, const SumValue& ik) {
  const std::int64_t p = field.p(), q = field.q();
  if (ik.value.conductor() != p) throw Error(Errc::WrongConductor, "bounds_check expects a value in Z[zeta_p]");
  const BigInt full_scale = BigInt(q) * (q - 1);
  CycInt scaled = ik.value;
  if (ik.scale == 1)
    scaled *= full_scale;
  else if (ik.scale != full_scale)
    throw Error(Errc::InvalidParameters, "unsupported scale");

  // Shift by the main terms exactly before embedding, so that the floating
  // point step only sees the small remainder.
  BigInt qm1_n = 1;
  for (int i = 0; i < n; ++i) qm1_n *= q - 1;
  const BigInt sign_n = n % 2 == 0 ? 1 : -1;
  const CycInt shifted1 = scaled + CycInt::constant(p, qm1_n * (q - 1));
  const CycInt shifted2 = scaled + CycInt::constant(p, (qm1_n - sign_n * (q + 1)) * (q - 1));

  BoundReport report;
  report.second_applicable = (n + 1) % p != 0;
  const double denom = static_cast<double>(q) * static_cast<double>(q - 1);
  const double rhs1 = std::pow(static_cast<double>(q), (n + 1) / 2.0);
  const double rhs2 = 2.0 * n * std::pow(static_cast<double>(q), n / 2.0);
  for (std::int64_t j = 1; j < std::max<std::int64_t>(p, 2); ++j) {
    BoundEntry e;
    e.embedding = j;
    const auto v1 = embed_complex(shifted1, j);
    e.lhs1 = std::abs(v1.value) / denom;
    e.rhs1 = rhs1;
    e.margin1 = rhs1 - e.lhs1;
    e.error_bound = v1.error_bound / denom;
    if (report.second_applicable) {
      const auto v2 = embed_complex(shifted2, j);
      e.lhs2 = std::abs(v2.value) / denom;
      e.rhs2 = rhs2;
      e.margin2 = rhs2 - *e.lhs2;
      e.error_bound = std::max(e.error_bound, v2.error_bound / denom);
    }
    report.entries.push_back(e);
  }
  return report;
}

BoundReport bounds_check(const FieldPtr& field, int n, const FieldElt& b) {
  return bounds_check(*field, n, ik_formula_scaled(field, n, b));
}

}  // namespace ikdeg
