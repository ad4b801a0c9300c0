#ifndef SZETA_HURWITZ_HPP
#define SZETA_HURWITZ_HPP

#include "eval_types.hpp"
#include "rational.hpp"

namespace szeta {

// Internal building block: one Euler-Maclaurin evaluation.
struct ZetaPart {
  Complex value{0.0, 0.0};
  double err = 0.0;   // absolute bound on |value - truth| (same units as value)
  long terms = 0;     // direct-sum length N
};

// Scaled Hurwitz zeta: returns h with zeta(w; a) = a^{-w} h. The scaling keeps
// every intermediate at moderate magnitude, so the continuation series can
// combine h with its own scaled prefactors without overflow.
ZetaPart hurwitz_scaled(Complex w, double a, double tol, int em_order);

// Regularized Hurwitz zeta: R(w; a) = zeta(w; a) - 1/(w-1), entire in w.
// Stable arbitrarily close to (and exactly at) w = 1, where R(1; a) = -psi(a).
ZetaPart hurwitz_regularized(Complex w, double a, double tol, int em_order);

// zeta(s; a) for a > 0, |s-1| > opts.pole_eps. Throws PoleAtOne / Domain.
EvalResult hurwitz_zeta(Complex s, double a, const EvalOptions& opts);

// zeta(s) = zeta(s; 1).
EvalResult riemann_zeta(Complex s, const EvalOptions& opts);

// psi(a) for positive integer or half-integer a (closed harmonic-sum forms).
double digamma_half_integer(const Rational& a);

}  // namespace szeta

#endif
