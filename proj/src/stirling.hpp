#ifndef SZETA_STIRLING_HPP
#define SZETA_STIRLING_HPP

#include "rational.hpp"

namespace szeta {

// Signed Stirling numbers of the first kind s_{n,m}, defined by
//   x(x+1)...(x+n-1) = sum_m (-1)^{n+m} s_{n,m} x^m,
// so s_{n,n} = 1, s_{n,0} = 0 for n >= 1, and
//   s_{n+1,m} = s_{n,m-1} - n s_{n,m}.
// Values are cached; the cache is safe for concurrent callers.
BigInt stirling_first(long n, long m);

}  // namespace szeta

#endif
