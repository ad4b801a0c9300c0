#ifndef SZETA_EVAL_TYPES_HPP
#define SZETA_EVAL_TYPES_HPP

#include <complex>

namespace szeta {

using Complex = std::complex<double>;

// Result flags.
//   Truncated: the requested tolerance was not certified -- the l-series cap
//     was reached, the tolerance was clamped at the double-precision floor,
//     or the achieved bound exceeds the request.
//   NearCancellation: at least one series term crossed the Hurwitz pole line
//     and was evaluated in regularized form.
//   ExactRouted: the value came from the exact rational path.
inline constexpr unsigned kFlagTruncated = 1u;
inline constexpr unsigned kFlagNearCancellation = 2u;
inline constexpr unsigned kFlagExactRouted = 4u;

struct EvalOptions {
  double tol = 1e-12;     // target absolute error
  int max_l = 200;        // continuation series cap
  double pole_eps = 1e-8; // rejection radius around true poles
  int em_order = 12;      // Euler-Maclaurin correction order (even, >= 2)

  void validate() const;  // throws Usage on malformed options

  // Effective tolerance: requests below 1e-14 are clamped (double carrier).
  double effective_tol(bool* clamped = nullptr) const;
};

struct EvalResult {
  Complex value{0.0, 0.0};
  double error_bound = 0.0;
  long terms_used = 0;
  unsigned flags = 0;

  bool truncated() const { return flags & kFlagTruncated; }
  bool near_cancellation() const { return flags & kFlagNearCancellation; }
  bool exact_routed() const { return flags & kFlagExactRouted; }
};

}  // namespace szeta

#endif
