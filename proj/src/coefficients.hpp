#ifndef SZETA_COEFFICIENTS_HPP
#define SZETA_COEFFICIENTS_HPP

#include <string>
#include <vector>

#include "rational.hpp"

namespace szeta {

enum class Method { Expansion, Stirling, Recursion };

const char* method_name(Method m);

// Row of coefficients B_{k,j}, j = 0..k-1: the shifted multiplicity polynomial
//   (k-1)! P_k(x - (k-1)/2) = sum_j B_{k,j} x^j.
// B_{k,0} = 0, B_{k,j} = 0 whenever j = k (mod 2), B_{k,k-1} = 2.
struct CoefficientTable {
  int k = 0;
  Method method = Method::Expansion;
  std::vector<Rational> coeffs;  // index j

  const Rational& at(int j) const { return coeffs.at(j); }
};

// Expand 2x (x - (k-1)/2 + 1) ... (x - (k-1)/2 + k-2).
CoefficientTable coeffs_via_expansion(int k);

// Double sum over Stirling numbers:
//   B_{k,j} = sum_p (-1)^{k+j+1} C(j+p, j) ((k-1)/2)^p (s_{k,j+p+1} + s_{k-1,j+p}).
CoefficientTable coeffs_via_stirling(int k);

// B_{2,1} = B_{3,2} = 2; B_{k,j} = B_{k-2,j-2} - ((k-3)/2)^2 B_{k-2,j},
// out-of-range entries read as 0.
CoefficientTable coeffs_via_recursion(int k);

// Cached access keyed by (k, method); tables are immutable once built.
const CoefficientTable& coefficient_table(int k, Method method);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  Rational lhs, rhs;
};

// Exact identity suite for the coefficient row of a given k:
//   sum_j B_{k,j} ((k-1)/2)^j = (k-1)!   and the p-grid vanishing sums
//   sum_j B_{k,j} p^j = 0 (p = 1..(k-3)/2 for odd k; p = 1/2, 3/2, ..., (k-3)/2
//   for even k).
std::vector<IdentityCheck> check_identities(int k);

}  // namespace szeta

#endif
