#pragma once

// Galois orbits of elements of Q(zeta_p), Gal(Q(zeta_p)/Q) = F_p^*. Since the
// extension is Galois, the degree of an element over Q is its orbit size.

#include "ikdeg/charsum.hpp"
#include "ikdeg/cyclo.hpp"

#include <vector>

namespace ikdeg {

struct OrbitReport {
  CycInt base;
  /// conjugates[a - 1] = sigma_a(base), a = 1 .. p-1, canonical forms.
  std::vector<CycInt> conjugates;
  std::int64_t distinct_count = 0;
  std::int64_t stabilizer_order = 0;
};

/// Requires conductor exactly p (prime); throws WrongConductor otherwise.
OrbitReport conjugate_set(const CycInt& z);

std::int64_t degree_of(const CycInt& z);

/// prod over the distinct conjugates c of (x - c), checked to have rational
/// integer coefficients and z as a root.
IntPoly min_poly(const CycInt& z);

/// sigma_a(q(q-1) IK_n(q, b)) == q(q-1) IK_n(q, b a^(-(n+1))), a in [1, p-1]
/// lifted through the prime subfield.
bool equivariance_check(const InvertedKloostermanFormula& formula, const FieldElt& b, std::int64_t a);
bool equivariance_check(const FieldPtr& field, int n, const FieldElt& b, std::int64_t a);

/// (p-1) / gcd(n+1, p-1): the degree bound, attained when q = p.
std::int64_t predicted_degree(std::int64_t p, int n);

}  // namespace ikdeg
