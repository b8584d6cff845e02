#pragma once

// Truncated pi-adic arithmetic in Z_p[pi]/(pi^N) with pi^(p-1) = -p, and the
// valuation analysis of differences of Galois conjugates of IK_n(p, b).
//
// An element is sum_i d_i pi^i with digits d_i in [0, p-1]. Normalisation
// uses the single relation p = -pi^(p-1): a carry c out of position i lands as
// -c at position i + p - 1.

#include "ikdeg/charsum.hpp"
#include "ikdeg/cyclo.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ikdeg {

class PadicElt {
 public:
  PadicElt(std::int64_t p, int precision);

  static PadicElt from_integer(std::int64_t p, int precision, const BigInt& value);
  static PadicElt pi(std::int64_t p, int precision);

  /// Builds an element from raw (possibly out-of-range) digit values.
  template <typename Int>
  static PadicElt from_raw(std::int64_t p, int precision, std::vector<Int> raw);

  std::int64_t p() const { return p_; }
  int precision() const { return precision_; }
  std::span<const std::int64_t> digits() const { return digits_; }
  std::int64_t digit(int i) const { return digits_[static_cast<std::size_t>(i)]; }

  /// Index of the first nonzero digit; nullopt when every digit below the
  /// precision vanishes (the valuation is then only known to be >= N).
  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  /// Same value at a lower precision.
  PadicElt truncated(int precision) const;
  /// Sets digit i (must currently hold 0) to d in [0, p-1].
  void set_digit(int i, std::int64_t d) { digits_[static_cast<std::size_t>(i)] = d; }

  PadicElt pow(std::uint64_t e) const;

  friend PadicElt operator+(const PadicElt& x, const PadicElt& y);
  friend PadicElt operator-(const PadicElt& x, const PadicElt& y);
  friend PadicElt operator*(const PadicElt& x, const PadicElt& y);
  PadicElt operator-() const;
  friend bool operator==(const PadicElt& x, const PadicElt& y);

  std::string to_string() const;

 private:
  void require_same(const PadicElt& other) const;

  std::int64_t p_;
  int precision_;
  std::vector<std::int64_t> digits_;
};

/// Default working precision 4(p-1) + 8 and the retry ceiling 32(p-1).
int default_precision(std::int64_t p);
int max_precision(std::int64_t p);

/// The (p-1)-th root of unity congruent to a modulo pi.
PadicElt teichmuller(std::int64_t p, std::int64_t a, int precision);

/// The primitive p-th root of unity zeta with zeta - 1 = pi mod pi^2.
PadicElt zeta_p_padic(std::int64_t p, int precision);

/// Ring map Z[zeta_(p(p-1))] -> Z_p[pi]/(pi^N) sending zeta_p to zeta_p_padic
/// and zeta_(p-1) to the Teichmuller lift of the smallest generator g of F_p^*,
/// so that omega^(-m) in charsum becomes the Teichmuller character.
class CyclotomicEmbedding {
 public:
  CyclotomicEmbedding(std::int64_t p, int precision);

  std::int64_t p() const { return p_; }
  int precision() const { return precision_; }

  /// z must have conductor dividing p(p-1).
  PadicElt operator()(const CycInt& z) const;

 private:
  std::int64_t p_;
  int precision_;
  std::vector<PadicElt> images_;  // images_[e] = image of zeta_(p(p-1))^e
};

PadicElt embed_cyclotomic(const CycInt& z, std::int64_t p, int precision);

struct StickelbergerResult {
  std::int64_t predicted = 0;
  std::int64_t observed = 0;
  bool ok = false;
};

/// v_pi(G(omega^(-m))) against the digit sum of m (which is m for q = p).
StickelbergerResult stickelberger_check(std::int64_t p, std::int64_t m, int precision);
StickelbergerResult stickelberger_check(const GaussSumTable& gauss, const CyclotomicEmbedding& embed, std::int64_t m);

/// V(m) = ((n+1)m + 2{-(n+1)m}_(p-1)) / (p-1) in v_p units, W(m) = (p-1) V(m)
/// in v_pi units.
struct ValuationPair {
  std::int64_t w = 0;
  std::int64_t v_num = 0;  // V = v_num / v_den in lowest terms
  std::int64_t v_den = 1;
  double v() const { return static_cast<double>(v_num) / static_cast<double>(v_den); }
};

ValuationPair valuation_formulas(std::int64_t p, int n, std::int64_t m);

enum class CaseLabel { Trivial, I, II, III, Stabilized };

std::string to_string(CaseLabel label);

/// Trivial when (p-1) | (n+1); I when p-1 > n+1; II when (n+1)/2 < p-1 < n+1;
/// III when p-1 < (n+1)/2.
CaseLabel classify_case(std::int64_t p, int n);

struct CaseReport {
  std::int64_t p = 0;
  int n = 0;
  std::int64_t b = 0;
  std::int64_t a = 0;
  CaseLabel label = CaseLabel::Trivial;
  std::optional<std::int64_t> h;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> m_star;
  std::optional<std::int64_t> predicted_valuation;  // pi units
  std::optional<std::int64_t> observed_valuation;
  /// For stabilised/trivial pairs: the exact difference vanished.
  bool difference_is_zero = false;
  int precision = 0;

  bool ok() const;
};

/// Case analysis for q = p with a reusable formula evaluator and embedding.
class CaseAnalyzer {
 public:
  CaseAnalyzer(std::int64_t p, int n, int precision = 0);

  std::int64_t p() const { return p_; }
  int n() const { return n_; }
  CaseLabel label() const { return label_; }

  /// Single attempt at the given precision (0: the analyzer's own); throws
  /// PrecisionExhausted when the difference vanishes to that precision.
  CaseReport analyze_at(std::int64_t b, std::int64_t a, int precision) const;
  /// Retries with doubled precision up to max_precision(p).
  CaseReport analyze(std::int64_t b, std::int64_t a) const;

  /// Main-term prediction (pi units), with h, k, m* filled in.
  CaseReport predict(std::int64_t a) const;

 private:
  std::int64_t p_;
  int n_;
  CaseLabel label_;
  FieldPtr field_;
  InvertedKloostermanFormula formula_;
  CyclotomicEmbedding embedding_;
};

CaseReport case_analysis(std::int64_t p, int n, std::int64_t b, std::int64_t a, int precision);

}  // namespace ikdeg
