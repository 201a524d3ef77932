#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "wzht/certsys.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "wzht/errors.hpp"

using namespace wzht;
using namespace wzht::testutil;

namespace {

// The two-variable system with certificates of k1 - k2 (and of |k1 - k2|).
CertificateSystem abs_diff_system() {
  VarSpec vs{0, 2};
  CertificateSystem c;
  c.varspec = vs;
  MultiPoly d = K(vs, 0) - K(vs, 1);
  MultiPoly one = C(vs, 1);
  c.b = {RatFunc::reduce(d + one, d), RatFunc::reduce(d - one, d)};
  return c;
}

}  // namespace

TEST_CASE("compatibility: mixed system of t^k / k!") {
  VarSpec vs{1, 1};
  CertificateSystem c;
  c.varspec = vs;
  c.a = {RatFunc::reduce(K(vs, 0), T(vs, 0))};
  c.b = {RatFunc::reduce(T(vs, 0), K(vs, 0) + C(vs, 1))};
  CompatReport rep = check_compatibility(c);
  CHECK(rep.ok);
  CHECK(rep.violations.empty());
}

TEST_CASE("compatibility: the |k1-k2| certificate system") {
  CompatReport rep = check_compatibility(abs_diff_system());
  CHECK(rep.ok);
}

TEST_CASE("compatibility: constant term") {
  VarSpec vs{2, 2};
  CertificateSystem c;
  c.varspec = vs;
  c.a = {RatFunc::zero(vs), RatFunc::zero(vs)};
  c.b = {RatFunc::one(vs), RatFunc::one(vs)};
  CHECK(check_compatibility(c).ok);
}

TEST_CASE("compatibility: SS violation carries a residual") {
  VarSpec vs{0, 2};
  CertificateSystem c;
  c.varspec = vs;
  c.b = {RatFunc::from_poly(K(vs, 0)), RatFunc::from_poly(K(vs, 0))};
  CompatReport rep = check_compatibility(c);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 1);
  const CompatViolation& v = rep.violations[0];
  CHECK(v.cond == CompatCond::SS);
  CHECK(v.i == 0);
  CHECK(v.j == 1);
  // S_1(b_2)/b_2 - S_2(b_1)/b_1 = (k1+1)/k1 - 1 = 1/k1.
  CHECK(v.residual == RatFunc::reduce(C(vs, 1), K(vs, 0)));
}

TEST_CASE("compatibility: DD and DS violations are tagged") {
  VarSpec vs{2, 1};
  CertificateSystem c;
  c.varspec = vs;
  // a1 = t2^2, a2 = 0 breaks D_2(a_1) = D_1(a_2).
  c.a = {RatFunc::from_poly(T(vs, 1) * T(vs, 1)), RatFunc::zero(vs)};
  c.b = {RatFunc::one(vs)};
  CompatReport rep = check_compatibility(c);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].cond == CompatCond::DD);

  // b1 = t1 breaks D_1(b_1)/b_1 = S_1(a_1) - a_1 = 0.
  c.a = {RatFunc::zero(vs), RatFunc::zero(vs)};
  c.b = {RatFunc::from_poly(T(vs, 0))};
  rep = check_compatibility(c);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].cond == CompatCond::DS);
  CHECK(rep.violations[0].residual == RatFunc::reduce(C(vs, 1), T(vs, 0)));
}

TEST_CASE("validate rejects malformed systems") {
  VarSpec vs{0, 1};
  CertificateSystem c;
  c.varspec = vs;
  c.b = {RatFunc::zero(vs)};
  CHECK_THROWS_AS(check_compatibility(c), Error);
  c.b.clear();
  CHECK_THROWS_AS(check_compatibility(c), Error);
}

TEST_CASE("conjugacy is structural equality of certificates") {
  CertificateSystem c1 = abs_diff_system();
  CertificateSystem c2 = abs_diff_system();
  CHECK(are_conjugate(c1, c2));

  VarSpec vs{0, 1};
  CertificateSystem d1, d2;
  d1.varspec = d2.varspec = vs;
  d1.b = {RatFunc::from_poly(K(vs, 0) + C(vs, 1))};
  d2.b = {RatFunc::from_poly(K(vs, 0) + C(vs, 2))};
  CHECK(are_conjugate(d1, d1));
  CHECK_FALSE(are_conjugate(d1, d2));
  CHECK_FALSE(are_conjugate(d1, c1));  // different varspec
}

TEST_CASE("compatibility is symmetric under index permutation") {
  VarSpec vs{1, 2};
  // Certificates of (t + k1 - k2): a = D(f)/f, b_j = S_j(f)/f.
  MultiPoly f = T(vs, 0) + K(vs, 0) - K(vs, 1);
  CertificateSystem c;
  c.varspec = vs;
  c.a = {RatFunc::reduce(C(vs, 1), f)};
  c.b = {RatFunc::reduce(f + C(vs, 1), f), RatFunc::reduce(f - C(vs, 1), f)};
  CHECK(check_compatibility(c).ok);
  // Swap the two k-variables: certificates of (t - k1 + k2).
  MultiPoly g = T(vs, 0) - K(vs, 0) + K(vs, 1);
  CertificateSystem cs;
  cs.varspec = vs;
  cs.a = {RatFunc::reduce(C(vs, 1), g)};
  cs.b = {RatFunc::reduce(g - C(vs, 1), g), RatFunc::reduce(g + C(vs, 1), g)};
  CHECK(check_compatibility(cs).ok);
}
