#pragma once

// Characters of F_q, Gauss sums, and the classical / inverted Kloosterman
// sums, both by direct enumeration and through the Gauss-sum expansion
//
//   q(q-1) IK_n(q,b) = -(q-1)^(n+1) + (-1)^(n+1)
//       + sum_{chi != 1} chi^(n+1)(-1) chi^(-1)(b) G(chi^(-(n+1)))^2 G(chi)^(n+1).
//
// Conductor conventions: additive characters live in Z[zeta_p], multiplicative
// characters in Z[zeta_(q-1)], Gauss sums in Z[zeta_(p(q-1))] with
// zeta_p = zeta^(q-1) and zeta_(q-1) = zeta^p.

#include "ikdeg/cyclo.hpp"
#include "ikdeg/ff.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace ikdeg {

inline constexpr std::int64_t kDefaultBudget = 2'000'000;

/// chi = omega^(-m_index), i.e. chi(g^j) = zeta_(q-1)^(-m_index * j).
class CharSpec {
 public:
  CharSpec(const Field& field, std::int64_t m_index)
      : field_(&field), m_index_(mod(m_index, field.q() - 1)) {}

  const Field& field() const { return *field_; }
  std::int64_t m_index() const { return m_index_; }
  bool is_trivial() const { return m_index_ == 0; }

  CharSpec pow(std::int64_t e) const { return {*field_, m_index_ * mod(e, field_->q() - 1)}; }

 private:
  const Field* field_;
  std::int64_t m_index_;
};

/// A sum together with the factor it was scaled by: value = scale * sum.
struct SumValue {
  CycInt value;
  BigInt scale = 1;
};

/// The sum itself: value / scale, divided exactly on canonical coefficients.
CycInt unscaled(const SumValue& sum);

/// psi(x) = zeta_p^Tr(x).
CycInt additive_char(const Field& field, const FieldElt& x);

/// chi(x) at conductor q - 1.
CycInt mult_char(const CharSpec& chi, const FieldElt& x);

/// G(chi) = sum_{x != 0} chi(x) psi(x) at conductor p(q-1).
CycInt gauss_sum(const CharSpec& chi);

/// All Gauss sums G(omega^(-m)), 0 <= m <= q-2, of one field.
class GaussSumTable {
 public:
  explicit GaussSumTable(FieldPtr field);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::int64_t conductor() const { return field_->p() * (field_->q() - 1); }
  const CycInt& operator[](std::int64_t m_index) const {
    return sums_[static_cast<std::size_t>(mod(m_index, field_->q() - 1))];
  }

 private:
  FieldPtr field_;
  std::vector<CycInt> sums_;
};

/// Gauss-sum route to q(q-1) IK_n(q, b). The b-independent product for each
/// character is formed once, so evaluating many b costs only rotations.
class InvertedKloostermanFormula {
 public:
  InvertedKloostermanFormula(std::shared_ptr<const GaussSumTable> gauss, int n);

  const Field& field() const { return gauss_->field(); }
  int n() const { return n_; }

  /// q(q-1) IK_n(q, b) at conductor p(q-1), before restriction to Q(zeta_p).
  CycInt evaluate_full(const FieldElt& b) const;
  /// q(q-1) IK_n(q, b) at conductor p, scale q(q-1).
  SumValue evaluate(const FieldElt& b) const;

 private:
  std::shared_ptr<const GaussSumTable> gauss_;
  int n_;
  BigInt constant_;
  std::vector<CycInt> terms_;  // index m: chi^(n+1)(-1) G(chi^(-(n+1)))^2 G(chi)^(n+1), chi = omega^(-m)
};

/// Classical K_n(q, b) by enumeration of the n free coordinates.
SumValue kloosterman_brute(const Field& field, int n, const FieldElt& b, std::int64_t budget = kDefaultBudget);

/// IK_n(q, b) by enumeration; x_(n+1) = b / (x_1 ... x_n).
SumValue inverted_kloosterman_brute(const Field& field, int n, const FieldElt& b,
                                    std::int64_t budget = kDefaultBudget);

/// q(q-1) IK_n(q, b) through the Gauss-sum expansion, at conductor p.
SumValue ik_formula_scaled(const FieldPtr& field, int n, const FieldElt& b);

/// q(q-1) S_1 recomputed from the u = 0 slice of the orthogonality expansion:
/// sum_lambda psi(1/lambda) * sum_{x_1..x_(n+1)} sum_chi chi(x_1 ... x_(n+1)).
CycInt s1_scaled(const Field& field, int n, std::int64_t budget = kDefaultBudget);

/// s1_scaled(field, n) == -(q-1)^(n+1).
bool s1_identity_check(const Field& field, int n, std::int64_t budget = kDefaultBudget);

struct BoundEntry {
  std::int64_t embedding = 1;
  double lhs1 = 0, rhs1 = 0, margin1 = 0;
  std::optional<double> lhs2, rhs2, margin2;
  double error_bound = 0;
};

/// Both estimates |IK + (q-1)^n/q| <= q^((n+1)/2) and, when p does not divide
/// n+1, |IK + ((q-1)^n - (-1)^n (q+1))/q| <= 2n q^(n/2), at every embedding
/// zeta_p -> exp(2 pi i j / p).
struct BoundReport {
  std::vector<BoundEntry> entries;
  bool second_applicable = false;

  bool holds(double slack = 1e-6) const;
  double max_lhs1() const;
  std::optional<double> max_lhs2() const;
  double rhs1() const { return entries.empty() ? 0 : entries.front().rhs1; }
  std::optional<double> rhs2() const { return entries.empty() ? std::nullopt : entries.front().rhs2; }
};

BoundReport bounds_check(const Field& field, int n, const SumValue& ik);
BoundReport bounds_check(const FieldPtr& field, int n, const FieldElt& b);

}  // namespace ikdeg
