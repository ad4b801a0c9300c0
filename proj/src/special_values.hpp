#ifndef SZETA_SPECIAL_VALUES_HPP
#define SZETA_SPECIAL_VALUES_HPP

#include <optional>
#include <vector>

#include "rational.hpp"

namespace szeta {

enum class Space { Sphere, Projective };

const char* space_name(Space s);

struct SpaceSpec {
  Space space = Space::Sphere;
  int k = 2;

  void validate() const;  // throws Usage when k < 2
};

struct PolePoint {
  long n = 0;          // candidate index
  Rational location;   // k/2 - n
};

// Exact residue of Z_k (or L_k) at s = k/2 - n; 0 when the point is regular.
// Projective residues are exactly half the sphere residues.
Rational residue(const SpaceSpec& spec, long n);

// Exact value at s = -n. Sphere: all k. Projective: odd k only; nullopt for
// even k, where no closed form exists and callers fall back to numeric
// evaluation.
std::optional<Rational> special_value(const SpaceSpec& spec, long n);

struct PoleEntry {
  PolePoint point;
  Rational res;
  bool regular = false;  // true iff the residue vanishes
};

std::vector<PoleEntry> pole_catalog(const SpaceSpec& spec, long n_max);

}  // namespace szeta

#endif
