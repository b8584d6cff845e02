#include "ikdeg/ff.hpp"

#include "ikdeg/error.hpp"

#include <charconv>
#include <sstream>

namespace ikdeg {

namespace {

using Poly = std::vector<std::int64_t>;  // ascending, residues mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic-or-unit-leading b over F_p.
Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::int64_t lead_inv = inverse_mod(b.back(), p);
  while (a.size() > db && !a.empty()) {
    const std::size_t shift = a.size() - 1 - db;
    const std::int64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
    trim(a);
  }
  return a;
}

Poly decode(std::uint64_t code, std::int64_t p, int k) {
  Poly out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(code % static_cast<std::uint64_t>(p));
    code /= static_cast<std::uint64_t>(p);
  }
  return out;
}

std::uint32_t encode(const Poly& coords, std::int64_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = coords.size(); i-- > 0;) code = code * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(coords[i]);
  return static_cast<std::uint32_t>(code);
}

// Product of two elements given as codes, reduced by the modulus. Only used
// while the log tables are being built.
std::uint32_t mul_slow(std::uint32_t x, std::uint32_t y, std::int64_t p, const Poly& modulus) {
  const int k = static_cast<int>(modulus.size()) - 1;
  Poly a = decode(x, p, k), b = decode(y, p, k);
  Poly prod(2 * static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % p;
  Poly r = poly_rem(prod, modulus, p);
  r.resize(static_cast<std::size_t>(k), 0);
  return encode(r, p);
}

std::uint32_t pow_slow(std::uint32_t x, std::int64_t e, std::int64_t p, const Poly& modulus) {
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul_slow(result, x, p, modulus);
    x = mul_slow(x, x, p, modulus);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::int64_t> poly, std::int64_t p) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c = mod(c, p);
  trim(f);
  if (f.size() < 2) return false;
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = static_cast<std::uint64_t>(ipow(p, static_cast<unsigned>(d)));
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = decode(low, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> default_modulus(std::int64_t p, int k) {
  const std::uint64_t count = static_cast<std::uint64_t>(ipow(p, static_cast<unsigned>(k)));
  for (std::uint64_t low = 0; low < count; ++low) {
    Poly f = decode(low, p, k);
    f.push_back(1);
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw Error(Errc::InvalidParameters, "no irreducible polynomial found");
}

FieldPtr Field::create(std::int64_t p, int k) {
  if (!is_prime(p)) throw Error(Errc::InvalidParameters, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(Errc::InvalidParameters, "extension degree must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(Errc::InvalidParameters, "field order exceeds table limit");
  }
  return create(p, default_modulus(p, k));
}

FieldPtr Field::create(std::int64_t p, std::vector<std::int64_t> modulus) {
  if (!is_prime(p)) throw Error(Errc::InvalidParameters, std::to_string(p) + " is not prime");
  if (modulus.size() < 2 || modulus.back() != 1)
    throw Error(Errc::InvalidParameters, "modulus must be monic of degree >= 1");
  for (auto& c : modulus) c = mod(c, p);
  if (!is_irreducible_mod_p(modulus, p)) throw Error(Errc::InvalidParameters, "modulus is reducible");
  std::int64_t q = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(Errc::InvalidParameters, "field order exceeds table limit");
  }
  return FieldPtr(new Field(p, std::move(modulus)));
}

Field::Field(std::int64_t p, std::vector<std::int64_t> modulus)
    : p_(p), k_(static_cast<int>(modulus.size()) - 1), q_(ipow(p, static_cast<unsigned>(modulus.size() - 1))), modulus_(std::move(modulus)) {
  const std::int64_t order = q_ - 1;
  const auto factors = prime_factors(order);

  std::uint32_t g = 0;
  for (std::uint32_t cand = 1; cand < static_cast<std::uint32_t>(q_); ++cand) {
    bool ok = true;
    for (std::int64_t ell : factors) {
      if (pow_slow(cand, order / ell, p_, modulus_) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }

  exp_.resize(static_cast<std::size_t>(order));
  log_.assign(static_cast<std::size_t>(q_), 0);
  std::uint32_t x = 1;
  for (std::int64_t j = 0; j < order; ++j) {
    exp_[static_cast<std::size_t>(j)] = x;
    log_[x] = static_cast<std::uint32_t>(j);
    x = mul_slow(x, g, p_, modulus_);
  }

  trace_.assign(static_cast<std::size_t>(q_), 0);
  for (std::uint32_t c = 1; c < static_cast<std::uint32_t>(q_); ++c) {
    std::uint32_t sum = 0;
    std::int64_t frob = 1;
    for (int i = 0; i < k_; ++i) {
      sum = add_code(sum, exp_code(static_cast<std::int64_t>(log_[c]) * frob % order));
      frob = frob * p_ % order;
    }
    trace_[c] = sum;  // lies in the prime subfield, so the code is the residue
  }
}

FieldElt Field::element(std::uint32_t code) const {
  if (code >= static_cast<std::uint64_t>(q_)) throw Error(Errc::InvalidParameters, "element code out of range");
  return {*this, code};
}

FieldElt Field::from_coords(std::span<const std::int64_t> coords) const {
  if (coords.size() > static_cast<std::size_t>(k_)) throw Error(Errc::InvalidParameters, "too many coordinates");
  Poly c(static_cast<std::size_t>(k_), 0);
  for (std::size_t i = 0; i < coords.size(); ++i) c[i] = mod(coords[i], p_);
  return {*this, encode(c, p_)};
}

FieldElt Field::from_int(std::int64_t value) const {
  return {*this, static_cast<std::uint32_t>(mod(value, p_))};
}

FieldElt Field::parse(const std::string& text) const {
  std::vector<std::int64_t> coords;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(':', start);
    std::string_view part(text.data() + start, (end == std::string::npos ? text.size() : end) - start);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw Error(Errc::InvalidParameters, "cannot parse field element '" + text + "'");
    coords.push_back(v);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return from_coords(coords);
}

void Field::check_member(const FieldElt& x) const {
  if (&x.field() != this) throw Error(Errc::FieldMismatch, "element belongs to a different field");
}

std::int64_t Field::dlog(const FieldElt& x) const {
  check_member(x);
  if (x.is_zero()) throw Error(Errc::LogOfZero, "discrete log of zero");
  return log_[x.code()];
}

std::int64_t Field::trace(const FieldElt& x) const {
  check_member(x);
  return trace_[x.code()];
}

std::uint32_t Field::add_code(std::uint32_t x, std::uint32_t y) const {
  if (k_ == 1) {
    std::uint32_t s = x + y;
    return s >= static_cast<std::uint32_t>(p_) ? s - static_cast<std::uint32_t>(p_) : s;
  }
  const auto up = static_cast<std::uint32_t>(p_);
  std::uint32_t out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    std::uint32_t d = x % up + y % up;
    if (d >= up) d -= up;
    out += d * scale;
    scale *= up;
    x /= up;
    y /= up;
  }
  return out;
}

std::uint32_t Field::neg_code(std::uint32_t x) const {
  const auto up = static_cast<std::uint32_t>(p_);
  if (k_ == 1) return x == 0 ? 0 : up - x;
  std::uint32_t out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    std::uint32_t d = x % up;
    out += (d == 0 ? 0 : up - d) * scale;
    scale *= up;
    x /= up;
  }
  return out;
}

FieldElt primitive_root(const Field& field) { return field.generator(); }

std::vector<std::int64_t> FieldElt::coords() const { return decode(code_, field_->p(), field_->k()); }

std::string FieldElt::to_string() const {
  auto c = coords();
  std::ostringstream out;
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ":" : "") << c[i];
  return out.str();
}

namespace {
const Field& common(const FieldElt& x, const FieldElt& y) {
  if (&x.field() != &y.field()) throw Error(Errc::FieldMismatch, "operands belong to different fields");
  return x.field();
}
}  // namespace

FieldElt operator+(const FieldElt& x, const FieldElt& y) {
  const Field& f = common(x, y);
  return {f, f.add_code(x.code(), y.code())};
}

FieldElt operator-(const FieldElt& x, const FieldElt& y) {
  const Field& f = common(x, y);
  return {f, f.add_code(x.code(), f.neg_code(y.code()))};
}

FieldElt operator*(const FieldElt& x, const FieldElt& y) {
  const Field& f = common(x, y);
  return {f, f.mul_code(x.code(), y.code())};
}

FieldElt operator/(const FieldElt& x, const FieldElt& y) {
  common(x, y);
  return x * y.inv();
}

FieldElt FieldElt::operator-() const { return {*field_, field_->neg_code(code_)}; }

FieldElt FieldElt::inv() const {
  if (is_zero()) throw Error(Errc::InversionOfZero, "inverse of zero");
  return {*field_, field_->inv_code(code_)};
}

FieldElt FieldElt::pow(std::int64_t e) const {
  if (is_zero()) {
    if (e < 0) throw Error(Errc::InversionOfZero, "negative power of zero");
    return e == 0 ? field_->one() : *this;
  }
  const std::int64_t order = field_->q() - 1;
  return {*field_, field_->exp_code(static_cast<std::int64_t>(field_->log_code(code_)) * mod(e, order) % order)};
}

FieldElt FieldElt::pow(const BigInt& e) const {
  if (is_zero()) {
    if (e < 0) throw Error(Errc::InversionOfZero, "negative power of zero");
    return e == 0 ? field_->one() : *this;
  }
  const BigInt order = field_->q() - 1;
  BigInt r = e % order;
  if (r < 0) r += order;
  return pow(static_cast<std::int64_t>(r));
}

}  // namespace ikdeg
