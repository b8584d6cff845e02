#pragma once

// Small integer helpers shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace ikdeg {

using BigInt = boost::multiprecision::cpp_int;

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Smallest non-negative residue of x modulo m (m > 0).
inline std::int64_t mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

bool is_prime(std::int64_t n);

/// Distinct prime divisors, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Modular inverse of a mod m; requires gcd(a, m) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

/// Exact integer power; the caller keeps results within int64.
std::int64_t ipow(std::int64_t base, unsigned exp);

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

}  // namespace ikdeg
