#ifndef SZETA_MULTIPLICITY_HPP
#define SZETA_MULTIPLICITY_HPP

#include "rational.hpp"

namespace szeta {

// Eigenvalue multiplicity on the k-sphere:
//   P_k(n) = (2n+k-1)(n+1)...(n+k-2) / (k-1)!,
// the dimension of the eigenspace of n(n+k-1). Requires k >= 2, n >= 0.
BigInt multiplicity(int k, long n);

// P_k evaluated at a rational argument (the same product formula over rationals).
Rational multiplicity_at(int k, const Rational& x);

}  // namespace szeta

#endif
