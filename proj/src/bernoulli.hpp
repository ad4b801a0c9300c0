#ifndef SZETA_BERNOULLI_HPP
#define SZETA_BERNOULLI_HPP

#include "rational.hpp"

namespace szeta {

// Bernoulli numbers with the B_1 = -1/2 convention (B_n = B_n(0)).
Rational bernoulli_number(long n);

// B_n(a) = sum_i C(n,i) B_i a^{n-i}.
Rational bernoulli_polynomial(long n, const Rational& a);

// Exact Hurwitz zeta at non-positive integers: zeta(-n; a) = -B_{n+1}(a)/(n+1).
// Requires a > 0.
Rational hurwitz_zeta_nonpos_int(long n, const Rational& a);

// zeta(-n) = zeta(-n; 1).
Rational riemann_zeta_nonpos_int(long n);

}  // namespace szeta

#endif
