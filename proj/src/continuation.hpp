#ifndef SZETA_CONTINUATION_HPP
#define SZETA_CONTINUATION_HPP

#include "eval_types.hpp"
#include "special_values.hpp"

namespace szeta {

// Thrown when an evaluation point sits within pole_eps of a true (nonzero
// residue) pole; carries the exact residue and pole location.
class AtPoleError : public Error {
 public:
  AtPoleError(Rational res, Rational location)
      : Error(ErrorCode::AtPole, "evaluation point is at a pole (s = " + location.str() + ")"),
        residue_(std::move(res)),
        location_(std::move(location)) {}

  const Rational& residue() const { return residue_; }
  const Rational& location() const { return location_; }

 private:
  Rational residue_;
  Rational location_;
};

// Analytic continuation of Z_k(s) / L_k(s): truncated sum over l of
//   binomial(-s,l) shift^{2l} sum_j B_{k,j} (weights) zeta(2s+2l-j; a),
// with (shift, a) = ((k-1)/2, (k+1)/2) for the sphere and the quarter-integer
// variant with 2^j weights and a 2^{-2s} prefactor for projective space.
// Exact non-positive integer points with a closed form are exact-routed.
// Throws AtPoleError within opts.pole_eps of a true pole.
EvalResult zeta_continuation(const SpaceSpec& spec, Complex s, const EvalOptions& opts);

// Defining Dirichlet series, summed to n_terms, with an integral-comparison
// tail bound from P_k(n) <= 2 (n+k)^{k-1} / (k-1)!. Requires
// Re s > k/2 + 1/4.
EvalResult dirichlet_oracle(const SpaceSpec& spec, Complex s, long n_terms,
                            const EvalOptions& opts);

// Richardson-extrapolated lim (s - s0) Z(s) at s0 = k/2 - n from symmetric
// samples s0 +- eps, s0 +- eps/2. Requires 0 < eps < 0.1.
Complex residue_numeric(const SpaceSpec& spec, long n, double eps, const EvalOptions& opts);

}  // namespace szeta

#endif
