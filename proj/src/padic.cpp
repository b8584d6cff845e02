#include "ikdeg/padic.hpp"

#include "ikdeg/error.hpp"

#include <sstream>

namespace ikdeg {

namespace {

template <typename Int>
std::vector<std::int64_t> normalize(std::int64_t p, int precision, std::vector<Int> raw) {
  const auto n = static_cast<std::size_t>(precision);
  raw.resize(n, 0);
  const auto shift = static_cast<std::size_t>(p - 1);
  std::vector<std::int64_t> out(n, 0);
  const Int ip = static_cast<Int>(p);
  for (std::size_t i = 0; i < n; ++i) {
    Int c = raw[i];
    Int r = c % ip;
    if (r < 0) r += ip;
    const Int carry = (c - r) / ip;
    out[i] = static_cast<std::int64_t>(r);
    // carry * p * pi^i = -carry * pi^(i + p - 1)
    if (carry != 0 && i + shift < n) raw[i + shift] -= carry;
  }
  return out;
}

void check_p(std::int64_t p) {
  if (!is_prime(p)) throw Error(Errc::InvalidParameters, std::to_string(p) + " is not prime");
}

}  // namespace

PadicElt::PadicElt(std::int64_t p, int precision) : p_(p), precision_(precision) {
  if (precision < 1) throw Error(Errc::PrecisionTooLow, "precision must be >= 1");
  digits_.assign(static_cast<std::size_t>(precision), 0);
}

template <typename Int>
PadicElt PadicElt::from_raw(std::int64_t p, int precision, std::vector<Int> raw) {
  PadicElt out(p, precision);
  out.digits_ = normalize(p, precision, std::move(raw));
  return out;
}

template PadicElt PadicElt::from_raw<std::int64_t>(std::int64_t, int, std::vector<std::int64_t>);
template PadicElt PadicElt::from_raw<__int128>(std::int64_t, int, std::vector<__int128>);

PadicElt PadicElt::from_integer(std::int64_t p, int precision, const BigInt& value) {
  // p^K vanishes modulo pi^N once K(p-1) >= N.
  const int K = (precision + static_cast<int>(p) - 2) / static_cast<int>(p - 1);
  BigInt modulus = 1;
  for (int i = 0; i < K; ++i) modulus *= p;
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  std::vector<std::int64_t> raw(static_cast<std::size_t>(precision), 0);
  // p^j = (-1)^j pi^(j(p-1))
  for (int j = 0; r != 0; ++j) {
    const auto d = static_cast<std::int64_t>(r % p);
    r /= p;
    const auto pos = static_cast<std::size_t>(j) * static_cast<std::size_t>(p - 1);
    if (pos < raw.size()) raw[pos] += (j % 2 == 0) ? d : -d;
  }
  return from_raw(p, precision, std::move(raw));
}

PadicElt PadicElt::pi(std::int64_t p, int precision) {
  PadicElt out(p, precision);
  if (precision > 1) out.digits_[1] = 1;
  return out;
}

std::optional<int> PadicElt::valuation() const {
  for (std::size_t i = 0; i < digits_.size(); ++i)
    if (digits_[i] != 0) return static_cast<int>(i);
  return std::nullopt;
}

PadicElt PadicElt::truncated(int precision) const {
  if (precision > precision_) throw Error(Errc::PrecisionMismatch, "cannot raise precision by truncation");
  PadicElt out(p_, precision);
  std::copy_n(digits_.begin(), precision, out.digits_.begin());
  return out;
}

void PadicElt::require_same(const PadicElt& other) const {
  if (p_ != other.p_ || precision_ != other.precision_)
    throw Error(Errc::PrecisionMismatch, "operands differ in p or precision");
}

PadicElt operator+(const PadicElt& x, const PadicElt& y) {
  x.require_same(y);
  std::vector<std::int64_t> raw(x.digits_);
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] += y.digits_[i];
  return PadicElt::from_raw(x.p_, x.precision_, std::move(raw));
}

PadicElt operator-(const PadicElt& x, const PadicElt& y) {
  x.require_same(y);
  std::vector<std::int64_t> raw(x.digits_);
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] -= y.digits_[i];
  return PadicElt::from_raw(x.p_, x.precision_, std::move(raw));
}

PadicElt PadicElt::operator-() const { return PadicElt(p_, precision_) - *this; }

PadicElt operator*(const PadicElt& x, const PadicElt& y) {
  x.require_same(y);
  const std::size_t n = x.digits_.size();
  std::vector<std::int64_t> raw(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t a = x.digits_[i];
    if (a == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) raw[i + j] += a * y.digits_[j];
  }
  return PadicElt::from_raw(x.p_, x.precision_, std::move(raw));
}

bool operator==(const PadicElt& x, const PadicElt& y) {
  x.require_same(y);
  return x.digits_ == y.digits_;
}

PadicElt PadicElt::pow(std::uint64_t e) const {
  PadicElt result = from_integer(p_, precision_, 1);
  PadicElt base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string PadicElt::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < digits_.size(); ++i) out << (i ? "," : "") << digits_[i];
  out << "] (p=" << p_ << ", N=" << precision_ << ")";
  return out.str();
}

int default_precision(std::int64_t p) { return static_cast<int>(4 * (p - 1) + 8); }
int max_precision(std::int64_t p) { return static_cast<int>(32 * (p - 1)); }

PadicElt teichmuller(std::int64_t p, std::int64_t a, int precision) {
  check_p(p);
  if (mod(a, p) == 0) throw Error(Errc::ZeroParameter, "Teichmuller lift of 0");
  PadicElt x = PadicElt::from_integer(p, precision, mod(a, p));
  // a^(p^k) converges to the lift; one more p-adic digit per iteration.
  for (int iter = 0; iter <= precision + 1; ++iter) {
    PadicElt next = x.pow(static_cast<std::uint64_t>(p));
    if (next == x) return x;
    x = std::move(next);
  }
  throw Error(Errc::PrecisionExhausted, "Teichmuller iteration did not stabilise");
}

PadicElt zeta_p_padic(std::int64_t p, int precision) {
  check_p(p);
  if (precision < 2 * static_cast<int>(p - 1)) throw Error(Errc::PrecisionTooLow, "need N >= 2(p-1)");
  // Root y = zeta - 1 of f(y) = ((1+y)^p - 1)/y = sum_{j=1}^{p} C(p,j) y^(j-1),
  // lifted one digit at a time from y = pi. If y is right modulo pi^i then
  // f(y) = 0 mod pi^(i+p-2), and the digit d at position i shifts f by
  // d u pi^(i+p-2) with u the leading digit of f'(y).
  const int work = precision + static_cast<int>(p);
  std::vector<BigInt> binom(static_cast<std::size_t>(p) + 1);
  binom[0] = 1;
  for (std::int64_t j = 1; j <= p; ++j) binom[static_cast<std::size_t>(j)] = binom[static_cast<std::size_t>(j - 1)] * (p - j + 1) / j;

  auto eval_f = [&](const PadicElt& y) {
    const int n = y.precision();
    PadicElt acc = PadicElt::from_integer(p, n, binom[static_cast<std::size_t>(p)]);
    for (std::int64_t j = p - 1; j >= 1; --j) acc = acc * y + PadicElt::from_integer(p, n, binom[static_cast<std::size_t>(j)]);
    return acc;
  };

  PadicElt y = PadicElt::pi(p, work);
  const int lead_pos = static_cast<int>(p) - 2;
  std::int64_t u = 0;
  {
    // f'(y) mod pi^(p-1) depends only on y mod pi^2.
    const int n = static_cast<int>(p) - 1 > 1 ? static_cast<int>(p) - 1 : 2;
    PadicElt yy = y.truncated(n);
    PadicElt acc = PadicElt::from_integer(p, n, binom[static_cast<std::size_t>(p)] * (p - 1));
    for (std::int64_t j = p - 1; j >= 2; --j)
      acc = acc * yy + PadicElt::from_integer(p, n, binom[static_cast<std::size_t>(j)] * (j - 1));
    u = acc.digit(lead_pos);
  }
  if (u == 0) throw Error(Errc::PrecisionExhausted, "unexpected vanishing derivative");
  const std::int64_t u_inv = inverse_mod(u, p);

  for (int i = 2; i + lead_pos < work; ++i) {
    const PadicElt f = eval_f(y.truncated(i + lead_pos + 1));
    const std::int64_t e = f.digit(i + lead_pos);
    y.set_digit(i, mod(-e * u_inv, p));
  }
  PadicElt zeta = (y + PadicElt::from_integer(p, work, 1)).truncated(precision);
  return zeta;
}

CyclotomicEmbedding::CyclotomicEmbedding(std::int64_t p, int precision) : p_(p), precision_(precision) {
  check_p(p);
  const FieldPtr field = Field::create(p, 1);
  const std::int64_t g = field->generator().code();
  const PadicElt zeta = zeta_p_padic(p, precision);
  const PadicElt teich = teichmuller(p, g, precision);

  std::vector<PadicElt> zeta_pows, teich_pows;
  zeta_pows.push_back(PadicElt::from_integer(p, precision, 1));
  for (std::int64_t i = 1; i < p; ++i) zeta_pows.push_back(zeta_pows.back() * zeta);
  teich_pows.push_back(PadicElt::from_integer(p, precision, 1));
  for (std::int64_t i = 1; i < p - 1; ++i) teich_pows.push_back(teich_pows.back() * teich);

  // zeta_M^e with M = p(p-1), written as zeta_p^alpha zeta_(p-1)^beta where
  // zeta_p = zeta_M^(p-1) and zeta_(p-1) = zeta_M^p: alpha = -e mod p,
  // beta = e mod (p-1).
  const std::int64_t M = p * (p - 1);
  images_.reserve(static_cast<std::size_t>(M));
  for (std::int64_t e = 0; e < M; ++e) {
    const std::int64_t alpha = mod(-e, p);
    const std::int64_t beta = mod(e, p - 1);
    images_.push_back(zeta_pows[static_cast<std::size_t>(alpha)] * teich_pows[static_cast<std::size_t>(beta)]);
  }
}

PadicElt CyclotomicEmbedding::operator()(const CycInt& z) const {
  const std::int64_t M = p_ * (p_ - 1);
  const std::int64_t d = z.conductor();
  if (M % d != 0)
    throw Error(Errc::UnsupportedConductor, "conductor " + std::to_string(d) + " does not divide p(p-1)");
  const std::int64_t step = M / d;
  const int K = (precision_ + static_cast<int>(p_) - 2) / static_cast<int>(p_ - 1);
  BigInt modulus = 1;
  for (int i = 0; i < K; ++i) modulus *= p_;

  const auto& c = z.coeffs();
  const auto n = static_cast<std::size_t>(precision_);
  const bool fast = boost::multiprecision::msb(modulus) + boost::multiprecision::msb(BigInt(M * p_)) < 120;
  if (fast) {
    std::vector<__int128> raw(n, 0);
    for (std::size_t e = 0; e < c.size(); ++e) {
      if (c[e] == 0) continue;
      BigInt r = c[e] % modulus;
      if (r < 0) r += modulus;
      const auto coef = static_cast<__int128>(static_cast<std::uint64_t>(r & BigInt(UINT64_MAX))) |
                        (static_cast<__int128>(static_cast<std::uint64_t>(r >> 64)) << 64);
      const auto& img = images_[static_cast<std::size_t>(static_cast<std::int64_t>(e) * step)].digits();
      for (std::size_t i = 0; i < n; ++i)
        if (img[i] != 0) raw[i] += coef * img[i];
    }
    return PadicElt::from_raw(p_, precision_, std::move(raw));
  }
  PadicElt acc(p_, precision_);
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    acc = acc + PadicElt::from_integer(p_, precision_, c[e]) * images_[static_cast<std::size_t>(static_cast<std::int64_t>(e) * step)];
  }
  return acc;
}

PadicElt embed_cyclotomic(const CycInt& z, std::int64_t p, int precision) {
  return CyclotomicEmbedding(p, precision)(z);
}

StickelbergerResult stickelberger_check(const GaussSumTable& gauss, const CyclotomicEmbedding& embed, std::int64_t m) {
  const std::int64_t p = embed.p();
  if (gauss.field().k() != 1 || gauss.field().p() != p)
    throw Error(Errc::UnsupportedConductor, "Stickelberger check is implemented for prime fields");
  if (m < 0 || m > p - 2) throw Error(Errc::InvalidParameters, "m must lie in [0, p-2]");
  const auto v = embed(gauss[m]).valuation();
  if (!v) throw Error(Errc::PrecisionExhausted, "Gauss sum vanishes to precision " + std::to_string(embed.precision()));
  StickelbergerResult out;
  out.predicted = m;  // base-p digit sum of m < p
  out.observed = *v;
  out.ok = out.predicted == out.observed;
  return out;
}

StickelbergerResult stickelberger_check(std::int64_t p, std::int64_t m, int precision) {
  const FieldPtr field = Field::create(p, 1);
  GaussSumTable gauss(field);
  CyclotomicEmbedding embed(p, precision);
  return stickelberger_check(gauss, embed, m);
}

ValuationPair valuation_formulas(std::int64_t p, int n, std::int64_t m) {
  check_p(p);
  if (m < 1 || m > p - 2) throw Error(Errc::InvalidParameters, "m must lie in [1, p-2]");
  const std::int64_t t = (n + 1) * m;
  if (t % (p - 1) == 0) throw Error(Errc::DegenerateIndex, "(p-1) divides (n+1)m");
  ValuationPair out;
  out.w = t + 2 * mod(-t, p - 1);
  const std::int64_t g = gcd(out.w, p - 1);
  out.v_num = out.w / g;
  out.v_den = (p - 1) / g;
  return out;
}

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Trivial: return "trivial";
    case CaseLabel::I: return "I";
    case CaseLabel::II: return "II";
    case CaseLabel::III: return "III";
    case CaseLabel::Stabilized: return "stabilized";
  }
  return "?";
}

CaseLabel classify_case(std::int64_t p, int n) {
  const std::int64_t s = n + 1, r = p - 1;
  if (s % r == 0) return CaseLabel::Trivial;
  if (r > s) return CaseLabel::I;
  // 2r == s would make r divide s, so the remaining split is strict.
  if (2 * r > s) return CaseLabel::II;
  return CaseLabel::III;
}

bool CaseReport::ok() const {
  if (label == CaseLabel::Trivial || label == CaseLabel::Stabilized) return difference_is_zero;
  return predicted_valuation && observed_valuation && *predicted_valuation == *observed_valuation;
}

CaseAnalyzer::CaseAnalyzer(std::int64_t p, int n, int precision)
    : p_(p),
      n_(n),
      label_(classify_case(p, n)),
      field_(Field::create(p, 1)),
      formula_(std::make_shared<GaussSumTable>(field_), n),
      embedding_(p, precision > 0 ? precision : default_precision(p)) {}

CaseReport CaseAnalyzer::predict(std::int64_t a) const {
  CaseReport r;
  r.p = p_;
  r.n = n_;
  r.a = a;
  r.label = label_;
  const std::int64_t s = n_ + 1, pm1 = p_ - 1;
  if (label_ == CaseLabel::Trivial) return r;
  if (pow_mod(a, gcd(s, pm1), p_) == 1) {
    r.label = CaseLabel::Stabilized;
    return r;
  }
  const std::int64_t a_inv = inverse_mod(a, p_);
  switch (label_) {
    case CaseLabel::I: {
      // p - 1 = k + (n+1) h with 1 <= k <= n+1
      const std::int64_t k = mod(pm1 - 1, s) + 1;
      const std::int64_t h = (pm1 - k) / s;
      std::int64_t m_star = 1;
      for (std::int64_t m = 1; m <= h; ++m)
        if (pow_mod(a_inv, m * s, p_) != 1) m_star = m;
      r.k = k;
      r.h = h;
      r.m_star = m_star;
      r.predicted_valuation = valuation_formulas(p_, n_, m_star).w;
      break;
    }
    case CaseLabel::II:
      r.m_star = 1;
      r.predicted_valuation = valuation_formulas(p_, n_, 1).w;
      break;
    case CaseLabel::III:
      r.h = mod(s, pm1);
      r.m_star = 1;
      r.predicted_valuation = s + 2 * (pm1 - *r.h);
      break;
    default: break;
  }
  return r;
}

CaseReport CaseAnalyzer::analyze_at(std::int64_t b, std::int64_t a, int precision) const {
  if (b < 1 || b >= p_ || a < 1 || a >= p_)
    throw Error(Errc::DegenerateParameters, "a and b must lie in [1, p-1]");
  CaseReport r = predict(a);
  r.b = b;
  const FieldElt fb = field_->from_int(b);
  const FieldElt moved = fb * field_->from_int(a).pow(-static_cast<std::int64_t>(n_ + 1));
  const CycInt diff = formula_.evaluate(fb).value - formula_.evaluate(moved).value;
  if (r.label == CaseLabel::Trivial || r.label == CaseLabel::Stabilized) {
    r.difference_is_zero = diff.is_zero();
    return r;
  }
  const int n = precision > 0 ? precision : embedding_.precision();
  r.precision = n;
  const PadicElt image = n == embedding_.precision() ? embedding_(diff) : CyclotomicEmbedding(p_, n)(diff);
  const auto v = image.valuation();
  if (!v)
    throw Error(Errc::PrecisionExhausted, "difference vanishes modulo pi^" + std::to_string(n) +
                                              " (p=" + std::to_string(p_) + ", n=" + std::to_string(n_) +
                                              ", b=" + std::to_string(b) + ", a=" + std::to_string(a) + ")");
  r.observed_valuation = *v;
  return r;
}

CaseReport CaseAnalyzer::analyze(std::int64_t b, std::int64_t a) const {
  int n = embedding_.precision();
  while (true) {
    try {
      return analyze_at(b, a, n);
    } catch (const Error& e) {
      if (e.code() != Errc::PrecisionExhausted || n >= max_precision(p_)) throw;
      n = std::min(2 * n, max_precision(p_));
    }
  }
}

CaseReport case_analysis(std::int64_t p, int n, std::int64_t b, std::int64_t a, int precision) {
  check_p(p);
  if (n < 1) throw Error(Errc::DegenerateParameters, "n must be >= 1");
  return CaseAnalyzer(p, n, precision).analyze_at(b, a, precision);
}

}  // namespace ikdeg
