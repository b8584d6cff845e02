#pragma once

// Exact arithmetic in Z[zeta_m].
//
// Values are stored in the group ring Z[x]/(x^m - 1): coefficient i belongs to
// zeta_m^i. Products are cyclic convolutions; reduction modulo the cyclotomic
// polynomial Phi_m only happens when a canonical form is requested (equality,
// output, subfield restriction).

#include "ikdeg/arith.hpp"

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ikdeg {

/// Dense univariate polynomial over Z, ascending coefficients, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  BigInt operator()(const BigInt& x) const;

  /// Human-readable form, e.g. "x^2 - x + 1".
  std::string to_string() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Phi_m by exact division of x^m - 1 by Phi_d over the proper divisors d | m.
/// Results are cached; safe to call concurrently.
const IntPoly& cyclotomic_poly(std::int64_t m);

class CycInt {
 public:
  CycInt() : CycInt(1) {}
  explicit CycInt(std::int64_t conductor);
  /// Group-ring coefficients; entries past index m wrap around.
  CycInt(std::int64_t conductor, std::vector<BigInt> coeffs);

  static CycInt constant(std::int64_t conductor, const BigInt& value);
  /// zeta_m^e for any integer e.
  static CycInt zeta(std::int64_t conductor, std::int64_t e);

  std::int64_t conductor() const { return m_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Representative reduced modulo Phi_m: only exponents < phi(m) are nonzero.
  CycInt canonical() const;
  /// Coefficients of the canonical form, length phi(m).
  std::vector<BigInt> canonical_coeffs() const;

  bool is_zero() const;
  /// The rational integer this value equals, if it is one.
  std::optional<BigInt> as_integer() const;

  /// Adds c * zeta^e in place.
  void add_term(std::int64_t e, const BigInt& c);
  /// Multiplication by zeta^e (a rotation of the coefficient vector).
  CycInt rotated(std::int64_t e) const;

  CycInt& operator+=(const CycInt& other);
  CycInt& operator-=(const CycInt& other);
  CycInt& operator*=(const BigInt& scalar);

  friend CycInt operator+(CycInt x, const CycInt& y) { return x += y; }
  friend CycInt operator-(CycInt x, const CycInt& y) { return x -= y; }
  friend CycInt operator*(const CycInt& x, const CycInt& y);
  friend CycInt operator*(CycInt x, const BigInt& s) { return x *= s; }
  friend CycInt operator*(const BigInt& s, CycInt x) { return x *= s; }
  CycInt operator-() const;

  /// Equality in Z[zeta_m]; conductors must match.
  friend bool operator==(const CycInt& x, const CycInt& y);

 private:
  void require_same(const CycInt& other) const;

  std::int64_t m_;
  std::vector<BigInt> coeffs_;
};

CycInt pow(const CycInt& base, unsigned exponent);

/// Re-embeds z into Z[zeta_M] for a multiple M of its conductor.
CycInt change_conductor(const CycInt& z, std::int64_t new_conductor);

/// Inverse of change_conductor for d | m with gcd(d, m/d) = 1: returns z as an
/// element of Z[zeta_d], or throws NotInSubfield when z does not lie there.
CycInt restrict_conductor(const CycInt& z, std::int64_t d);

/// sigma_a: zeta_m -> zeta_m^a, returned in canonical form.
CycInt galois_apply(const CycInt& z, std::int64_t a);

struct ComplexEmbedding {
  std::complex<double> value;
  /// Upper bound on the floating-point error of value.
  double error_bound = 0.0;
};

/// Evaluates z at exp(2 pi i j / m); requires gcd(j, m) = 1.
ComplexEmbedding embed_complex(const CycInt& z, std::int64_t j);

/// {"m": m, "coeffs": [...]} with the canonical coefficients as exact integers.
std::string to_json(const CycInt& z);

std::ostream& operator<<(std::ostream& out, const CycInt& z);
std::ostream& operator<<(std::ostream& out, const IntPoly& f);

}  // namespace ikdeg
