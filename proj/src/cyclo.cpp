#include "ikdeg/cyclo.hpp"

#include "ikdeg/error.hpp"

#include <cfloat>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>

namespace ikdeg {

namespace mp = boost::multiprecision;

namespace {

unsigned bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return static_cast<unsigned>(mp::msb(mp::abs(x))) + 1;
}

BigInt from_int128(__int128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return BigInt(static_cast<std::int64_t>(v));
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt out = BigInt(static_cast<std::uint64_t>(u >> 64));
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

struct Entry {
  std::size_t index;
  const BigInt* value;
};

std::vector<Entry> nonzero_entries(const std::vector<BigInt>& c, unsigned& max_bits) {
  std::vector<Entry> out;
  max_bits = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) {
      out.push_back({i, &c[i]});
      max_bits = std::max(max_bits, bit_length(c[i]));
    }
  }
  return out;
}

// Phi_m as machine integers plus phi(m); coefficients of Phi_m stay tiny for
// every conductor this library meets.
struct Reducer {
  std::size_t phi;
  std::vector<std::int64_t> poly;
};

const Reducer& reducer_for(std::int64_t m) {
  static std::mutex mu;
  static std::map<std::int64_t, Reducer> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  const IntPoly& phi_m = cyclotomic_poly(m);
  Reducer r;
  r.phi = static_cast<std::size_t>(phi_m.degree());
  for (const auto& c : phi_m.coeffs()) r.poly.push_back(static_cast<std::int64_t>(c));
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(r)).first->second;
}

void reduce_in_place(std::vector<BigInt>& c, std::int64_t m) {
  const Reducer& r = reducer_for(m);
  for (std::size_t i = c.size(); i-- > r.phi;) {
    if (c[i] == 0) continue;
    const BigInt lead = c[i];
    const std::size_t base = i - r.phi;
    for (std::size_t j = 0; j < r.phi; ++j) {
      const std::int64_t f = r.poly[j];
      if (f == 0) continue;
      if (f == 1)
        c[base + j] -= lead;
      else if (f == -1)
        c[base + j] += lead;
      else
        c[base + j] -= lead * f;
    }
    c[i] = 0;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = mp::abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) out << mag;
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

const IntPoly& cyclotomic_poly(std::int64_t m) {
  if (m < 1) throw Error(Errc::InvalidParameters, "cyclotomic_poly: m must be >= 1");
  static std::mutex mu;
  static std::map<std::int64_t, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // x^m - 1, then divide out Phi_d for every proper divisor d.
  std::vector<BigInt> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (std::int64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& div = cyclotomic_poly(d).coeffs();
    const std::size_t dd = div.size() - 1;
    std::vector<BigInt> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const BigInt c = num[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  IntPoly result(std::move(num));
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(result)).first->second;
}

// ---------------------------------------------------------------------------
// CycInt

CycInt::CycInt(std::int64_t conductor) : m_(conductor) {
  if (conductor < 1) throw Error(Errc::InvalidParameters, "conductor must be >= 1");
  coeffs_.assign(static_cast<std::size_t>(conductor), 0);
}

CycInt::CycInt(std::int64_t conductor, std::vector<BigInt> coeffs) : CycInt(conductor) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i % coeffs_.size()] += coeffs[i];
}

CycInt CycInt::constant(std::int64_t conductor, const BigInt& value) {
  CycInt z(conductor);
  z.coeffs_[0] = value;
  return z;
}

CycInt CycInt::zeta(std::int64_t conductor, std::int64_t e) {
  CycInt z(conductor);
  z.coeffs_[static_cast<std::size_t>(mod(e, conductor))] = 1;
  return z;
}

CycInt CycInt::canonical() const {
  CycInt out = *this;
  reduce_in_place(out.coeffs_, m_);
  return out;
}

std::vector<BigInt> CycInt::canonical_coeffs() const {
  std::vector<BigInt> c = coeffs_;
  reduce_in_place(c, m_);
  c.resize(reducer_for(m_).phi);
  return c;
}

bool CycInt::is_zero() const {
  bool all_zero = true;
  for (const auto& c : coeffs_)
    if (c != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) return true;
  for (const auto& c : canonical_coeffs())
    if (c != 0) return false;
  return true;
}

std::optional<BigInt> CycInt::as_integer() const {
  auto c = canonical_coeffs();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  return c.empty() ? BigInt(0) : c[0];
}

void CycInt::add_term(std::int64_t e, const BigInt& c) { coeffs_[static_cast<std::size_t>(mod(e, m_))] += c; }

CycInt CycInt::rotated(std::int64_t e) const {
  CycInt out(m_);
  const std::size_t shift = static_cast<std::size_t>(mod(e, m_));
  const std::size_t m = coeffs_.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t j = i + shift;
    if (j >= m) j -= m;
    out.coeffs_[j] = coeffs_[i];
  }
  return out;
}

void CycInt::require_same(const CycInt& other) const {
  if (m_ != other.m_)
    throw Error(Errc::ConductorMismatch,
                "conductors " + std::to_string(m_) + " and " + std::to_string(other.m_));
}

CycInt& CycInt::operator+=(const CycInt& other) {
  require_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (other.coeffs_[i] != 0) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
  require_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (other.coeffs_[i] != 0) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_)
    if (c != 0) c *= scalar;
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycInt operator*(const CycInt& x, const CycInt& y) {
  x.require_same(y);
  const std::size_t m = x.coeffs_.size();
  unsigned bx = 0, by = 0;
  auto ex = nonzero_entries(x.coeffs_, bx);
  auto ey = nonzero_entries(y.coeffs_, by);
  CycInt out(x.m_);
  if (ex.empty() || ey.empty()) return out;
  if (ex.size() > ey.size()) {
    std::swap(ex, ey);
    std::swap(bx, by);
  }
  const unsigned terms_bits = bit_length(BigInt(ex.size()));
  if (bx <= 62 && by <= 62 && bx + by + terms_bits <= 125) {
    std::vector<__int128> acc(m, 0);
    std::vector<std::pair<std::size_t, std::int64_t>> small_y;
    small_y.reserve(ey.size());
    for (const auto& e : ey) small_y.emplace_back(e.index, static_cast<std::int64_t>(*e.value));
    for (const auto& a : ex) {
      const __int128 av = static_cast<std::int64_t>(*a.value);
      for (const auto& [j, bv] : small_y) {
        std::size_t k = a.index + j;
        if (k >= m) k -= m;
        acc[k] += av * bv;
      }
    }
    for (std::size_t k = 0; k < m; ++k)
      if (acc[k] != 0) out.coeffs_[k] = from_int128(acc[k]);
    return out;
  }
  for (const auto& a : ex)
    for (const auto& b : ey) {
      std::size_t k = a.index + b.index;
      if (k >= m) k -= m;
      out.coeffs_[k] += *a.value * *b.value;
    }
  return out;
}

bool operator==(const CycInt& x, const CycInt& y) {
  x.require_same(y);
  return (x - y).is_zero();
}

CycInt pow(const CycInt& base, unsigned exponent) {
  CycInt result = CycInt::constant(base.conductor(), 1);
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

CycInt change_conductor(const CycInt& z, std::int64_t new_conductor) {
  if (new_conductor < 1 || new_conductor % z.conductor() != 0)
    throw Error(Errc::ConductorMismatch, "target conductor must be a multiple of the source conductor");
  const std::int64_t step = new_conductor / z.conductor();
  CycInt out(new_conductor);
  const auto& c = z.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out.add_term(static_cast<std::int64_t>(i) * step, c[i]);
  return out;
}

CycInt restrict_conductor(const CycInt& z, std::int64_t d) {
  const std::int64_t m = z.conductor();
  if (d < 1 || m % d != 0) throw Error(Errc::UnsupportedConductor, "target must divide the conductor");
  const std::int64_t r = m / d;
  if (gcd(d, r) != 1) throw Error(Errc::UnsupportedConductor, "cofactor must be coprime to the target conductor");
  if (r == 1) return z;

  // Z[zeta_m] = Z[zeta_d][zeta_r]; zeta_d = zeta_m^r and zeta_r = zeta_m^d.
  // Write each exponent as alpha*r + beta*d and reduce in zeta_r over Z[zeta_d].
  const std::int64_t r_inv = inverse_mod(r, d);
  const std::int64_t d_inv = inverse_mod(d, r);
  const auto ud = static_cast<std::size_t>(d);
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(r), std::vector<BigInt>(ud, 0));
  const auto& c = z.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    const auto ie = static_cast<std::int64_t>(e);
    const auto alpha = static_cast<std::size_t>(ie * r_inv % d);
    const auto beta = static_cast<std::size_t>(ie * d_inv % r);
    rows[beta][alpha] += c[e];
  }
  const IntPoly& phi_r = cyclotomic_poly(r);
  const auto deg = static_cast<std::size_t>(phi_r.degree());
  for (std::size_t beta = rows.size(); beta-- > deg;) {
    const std::vector<BigInt> lead = rows[beta];
    for (std::size_t j = 0; j < deg; ++j) {
      const BigInt& f = phi_r.coeffs()[j];
      if (f == 0) continue;
      for (std::size_t a = 0; a < ud; ++a)
        if (lead[a] != 0) rows[beta - deg + j][a] -= f * lead[a];
    }
  }
  for (std::size_t beta = 1; beta < deg; ++beta)
    if (!CycInt(d, rows[beta]).is_zero())
      throw Error(Errc::NotInSubfield, "value does not lie in Z[zeta_" + std::to_string(d) + "]");
  return CycInt(d, std::move(rows[0]));
}

CycInt galois_apply(const CycInt& z, std::int64_t a) {
  const std::int64_t m = z.conductor();
  if (gcd(a, m) != 1)
    throw Error(Errc::NonCoprimeIndex, "index " + std::to_string(a) + " not coprime to " + std::to_string(m));
  CycInt out(m);
  const auto& c = z.coeffs();
  const std::int64_t step = mod(a, m);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out.add_term(static_cast<std::int64_t>(i) * step % m, c[i]);
  return out.canonical();
}

ComplexEmbedding embed_complex(const CycInt& z, std::int64_t j) {
  const std::int64_t m = z.conductor();
  if (gcd(j, m) != 1)
    throw Error(Errc::NonCoprimeIndex, "embedding index " + std::to_string(j) + " not coprime to " + std::to_string(m));
  long double re = 0, im = 0, l1 = 0;
  const auto& c = z.coeffs();
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  const std::int64_t step = mod(j, m);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const auto ci = c[i].convert_to<long double>();
    const long double angle = two_pi * static_cast<long double>(static_cast<std::int64_t>(i) * step % m) / static_cast<long double>(m);
    re += ci * std::cos(angle);
    im += ci * std::sin(angle);
    l1 += std::fabs(ci);
  }
  ComplexEmbedding out;
  out.value = {static_cast<double>(re), static_cast<double>(im)};
  const long double scale = static_cast<long double>(c.size()) + 4;
  out.error_bound = static_cast<double>(l1 * scale * LDBL_EPSILON) + std::hypot(static_cast<double>(re), static_cast<double>(im)) * DBL_EPSILON;
  return out;
}

std::string to_json(const CycInt& z) {
  std::ostringstream out;
  out << "{\"m\": " << z.conductor() << ", \"coeffs\": [";
  auto c = z.canonical_coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << c[i];
  out << "]}";
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const CycInt& z) { return out << to_json(z); }

std::ostream& operator<<(std::ostream& out, const IntPoly& f) { return out << f.to_string(); }

}  // namespace ikdeg
