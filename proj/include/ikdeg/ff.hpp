#pragma once

// Finite fields F_q, q = p^k, stored as F_p[t]/(f(t)) with full log/antilog
// tables. Elements are encoded as integers sum c_i p^i over their power-basis
// coordinates, which is also the canonical element ordering.

#include "ikdeg/arith.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ikdeg {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldElt {
 public:
  FieldElt() = default;
  FieldElt(const Field& field, std::uint32_t code) : field_(&field), code_(code) {}

  const Field& field() const { return *field_; }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  /// Power-basis coordinates c_0 .. c_{k-1}.
  std::vector<std::int64_t> coords() const;

  FieldElt inv() const;
  FieldElt pow(std::int64_t e) const;
  FieldElt pow(const BigInt& e) const;

  /// Coordinates joined by ':' (for prime fields just the residue).
  std::string to_string() const;

  friend FieldElt operator+(const FieldElt& x, const FieldElt& y);
  friend FieldElt operator-(const FieldElt& x, const FieldElt& y);
  friend FieldElt operator*(const FieldElt& x, const FieldElt& y);
  friend FieldElt operator/(const FieldElt& x, const FieldElt& y);
  FieldElt operator-() const;

  friend bool operator==(const FieldElt& x, const FieldElt& y) {
    return x.field_ == y.field_ && x.code_ == y.code_;
  }
  friend std::strong_ordering operator<=>(const FieldElt& x, const FieldElt& y) {
    return x.code_ <=> y.code_;
  }

 private:
  const Field* field_ = nullptr;
  std::uint32_t code_ = 0;
};

class Field {
 public:
  /// Largest supported field size; tables are O(q).
  static constexpr std::int64_t kMaxOrder = std::int64_t{1} << 24;

  /// F_{p^k} with the lexicographically smallest monic irreducible modulus.
  static FieldPtr create(std::int64_t p, int k = 1);

  /// F_{p^k} with a caller-supplied monic modulus (ascending coefficients,
  /// length k + 1). Irreducibility is checked.
  static FieldPtr create(std::int64_t p, std::vector<std::int64_t> modulus);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::int64_t p() const { return p_; }
  int k() const { return k_; }
  std::int64_t q() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  FieldElt zero() const { return {*this, 0}; }
  FieldElt one() const { return {*this, 1}; }
  FieldElt element(std::uint32_t code) const;
  FieldElt from_coords(std::span<const std::int64_t> coords) const;
  /// Image of an integer in the prime subfield.
  FieldElt from_int(std::int64_t value) const;
  /// Parses "c0:c1:..." (or a bare residue for the prime subfield).
  FieldElt parse(const std::string& text) const;

  FieldElt generator() const { return {*this, exp_[1 % exp_.size()]}; }
  /// g^j for any integer j.
  FieldElt exp(std::int64_t j) const { return {*this, exp_code(j)}; }
  std::int64_t dlog(const FieldElt& x) const;
  std::int64_t trace(const FieldElt& x) const;

  // Code-level kernels for enumeration loops; no membership checks.
  std::uint32_t add_code(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg_code(std::uint32_t x) const;
  std::uint32_t mul_code(std::uint32_t x, std::uint32_t y) const {
    if (x == 0 || y == 0) return 0;
    std::uint32_t s = log_[x] + log_[y];
    return exp_[s >= exp_.size() ? s - exp_.size() : s];
  }
  std::uint32_t inv_code(std::uint32_t x) const {
    return log_[x] == 0 ? 1 : exp_[exp_.size() - log_[x]];
  }
  std::uint32_t exp_code(std::int64_t j) const {
    return exp_[static_cast<std::size_t>(mod(j, static_cast<std::int64_t>(exp_.size())))];
  }
  std::uint32_t log_code(std::uint32_t x) const { return log_[x]; }
  std::uint32_t trace_code(std::uint32_t x) const { return trace_[x]; }

  void check_member(const FieldElt& x) const;

 private:
  Field(std::int64_t p, std::vector<std::int64_t> modulus);

  std::int64_t p_;
  int k_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;
  std::vector<std::uint32_t> exp_;    // exp_[j] = g^j, j in [0, q-2]
  std::vector<std::uint32_t> log_;    // log_[g^j] = j; log_[0] unused
  std::vector<std::uint32_t> trace_;  // trace_[x] in [0, p-1]
};

/// Smallest generator of F_q^* in the canonical element ordering.
FieldElt primitive_root(const Field& field);

/// Lexicographically smallest monic irreducible polynomial of degree k over
/// F_p, ascending coefficients.
std::vector<std::int64_t> default_modulus(std::int64_t p, int k);

bool is_irreducible_mod_p(std::span<const std::int64_t> poly, std::int64_t p);

}  // namespace ikdeg
