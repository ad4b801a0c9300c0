#ifndef SZETA_VERIFY_HPP
#define SZETA_VERIFY_HPP

#include <string>
#include <vector>

namespace szeta {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // filled on failure (and for a few informational passes)
};

// Exact checks (rational arithmetic, no tolerance) for all k in 2..k_max:
// cross-method table equality, zero pattern, integrality, the identity suite,
// Stirling recurrence, the shifted-polynomial identity at random rational
// points, residue structure, and special-value structure.
std::vector<CheckResult> verify_exact(int k_max);

// Floating-point cross checks for k in 2..min(k_max, 6): closed-form anchors,
// continuation vs Dirichlet oracle, numeric residues vs exact, exact-routing
// consistency, the Hurwitz half-argument identity, and the circle sanity
// check; tol is the numeric tolerance fed to the evaluators.
std::vector<CheckResult> verify_numeric(int k_max, double tol);

std::vector<CheckResult> verify_all(int k_max, double tol);

}  // namespace szeta

#endif
