#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "errors.hpp"
#include "special_values.hpp"

using namespace szeta;

namespace {
const SpaceSpec S2{Space::Sphere, 2};
const SpaceSpec S3{Space::Sphere, 3};
const SpaceSpec S4{Space::Sphere, 4};
const SpaceSpec P3{Space::Projective, 3};
}  // namespace

TEST_CASE("residues, frozen") {
  CHECK(residue(S2, 0) == Rational(1));
  CHECK(residue(P3, 0) == Rational(1, 4));
  CHECK(residue(S4, 2) == Rational(0));
  CHECK(residue(S3, 0) == Rational(1, 2));
  CHECK(residue(S3, 1) == Rational(1, 4));
  CHECK_THROWS_AS(residue({Space::Sphere, 1}, 0), Error);
  CHECK_THROWS_AS(residue(S2, -1), Error);
}

TEST_CASE("residue structure across k") {
  for (int k = 2; k <= 25; ++k) {
    SpaceSpec sph{Space::Sphere, k}, proj{Space::Projective, k};
    CHECK(residue(sph, 0) == Rational(BigInt(1), factorial(k - 1)));
    CHECK(residue(proj, 0) == Rational(BigInt(1), BigInt(2 * factorial(k - 1))));
    for (long n = 0; n <= 10; ++n) {
      CHECK(residue(proj, n) == residue(sph, n) / Rational(2));
    }
  }
  for (int k = 2; k <= 12; k += 2) {
    for (long n = k / 2; n <= 10; ++n) CHECK(residue({Space::Sphere, k}, n) == Rational(0));
  }
}

TEST_CASE("special values, frozen") {
  CHECK(special_value(S3, 0) == Rational(-1));
  CHECK(special_value({Space::Sphere, 5}, 2) == Rational(0));
  CHECK(special_value(S2, 0) == Rational(-2, 3));
  CHECK(special_value(S2, 1) == Rational(-1, 15));
  CHECK(special_value(S4, 0) == Rational(-61, 90));
  CHECK(special_value(S4, 1) == Rational(-37, 189));
  CHECK(special_value(S4, 2) == Rational(149, 945));
  CHECK(special_value({Space::Sphere, 6}, 0) == Rational(-2641, 3780));
  CHECK(special_value({Space::Sphere, 6}, 2) == Rational(137, 330));
  CHECK(special_value(P3, 0) == Rational(-1));
  CHECK(special_value(P3, 1) == Rational(0));
}

TEST_CASE("special value structure") {
  for (int k = 3; k <= 25; k += 2) {
    for (long n = 0; n <= 10; ++n) {
      Rational want = n == 0 ? Rational(-1) : Rational(0);
      CHECK(special_value({Space::Sphere, k}, n) == want);
      CHECK(special_value({Space::Projective, k}, n) == want);
    }
  }
  // Even-k sphere values exist (rationality); even-k projective do not.
  for (int k = 2; k <= 12; k += 2) {
    for (long n = 0; n <= 10; ++n) {
      CHECK(special_value({Space::Sphere, k}, n).has_value());
      CHECK(!special_value({Space::Projective, k}, n).has_value());
    }
  }
  CHECK_THROWS_AS(special_value(S2, -3), Error);
}

TEST_CASE("pole catalog") {
  auto cat = pole_catalog(S4, 4);
  REQUIRE(cat.size() == 5);
  // Nonzero residues only at s in {2, 1}.
  CHECK(cat[0].point.location == Rational(2));
  CHECK(!cat[0].regular);
  CHECK(cat[1].point.location == Rational(1));
  CHECK(!cat[1].regular);
  for (size_t i = 2; i < cat.size(); ++i) {
    CHECK(cat[i].regular);
    CHECK(cat[i].res == Rational(0));
  }

  auto cat3 = pole_catalog(S3, 1);
  REQUIRE(cat3.size() == 2);
  CHECK(cat3[0].point.location == Rational(3, 2));
  CHECK(cat3[0].res == Rational(1, 2));
  CHECK(cat3[1].point.location == Rational(1, 2));
  CHECK(cat3[1].res == Rational(1, 4));

  CHECK_THROWS_AS(pole_catalog(S2, -1), Error);
}
