#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "wzht/christopher.hpp"

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "wzht/errors.hpp"

using namespace wzht;
using namespace wzht::testutil;

namespace {

RatFunc log_deriv(const MultiPoly& g, int i) {
  return RatFunc::reduce(g.derivative(i), g);
}

/// Combined logarithmic differential of a part list, per variable.
RatFunc log_form(const std::vector<std::pair<Rat, MultiPoly>>& parts, VarSpec vs, int i) {
  RatFunc acc = RatFunc::zero(vs);
  for (const auto& [gamma, g] : parts)
    acc = acc + RatFunc::constant(vs, gamma) * log_deriv(g, i);
  return acc;
}

}  // namespace

TEST_CASE("decompose_continuous: the t1 t2 exponential-log mix") {
  VarSpec vs{2, 0};
  // a1 = t2 + 1/t1, a2 = t1 + 1/t2
  std::vector<RatFunc> a{
      RF(T(vs, 1)) + RatFunc::reduce(C(vs, 1), T(vs, 0)),
      RF(T(vs, 0)) + RatFunc::reduce(C(vs, 1), T(vs, 1)),
  };
  ContinuousDecomp d = decompose_continuous(a, vs);
  CHECK(d.g0 == RF(T(vs, 0) * T(vs, 1)));
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0].first == 1);
  CHECK(d.parts[0].second == T(vs, 0));
  CHECK(d.parts[1].first == 1);
  CHECK(d.parts[1].second == T(vs, 1));
  CHECK(verify_continuous(a, d));
}

TEST_CASE("decompose_continuous: pure logarithmic derivative") {
  VarSpec vs{1, 0};
  MultiPoly den = T(vs, 0) * T(vs, 0) * T(vs, 0) + C(vs, 1);  // t^3+1
  std::vector<RatFunc> a{RatFunc::reduce(C(vs, 3) * T(vs, 0) * T(vs, 0), den)};
  ContinuousDecomp d = decompose_continuous(a, vs);
  CHECK(d.g0.is_zero());
  REQUIRE(d.parts.size() == 1);
  CHECK(d.parts[0].first == 1);
  CHECK(d.parts[0].second == den);
  CHECK(verify_continuous(a, d));
}

TEST_CASE("decompose_continuous: trivial and empty systems") {
  VarSpec vs{1, 0};
  ContinuousDecomp d = decompose_continuous({RatFunc::zero(vs)}, vs);
  CHECK(d.g0.is_zero());
  CHECK(d.parts.empty());
  VarSpec empty{0, 0};
  ContinuousDecomp e = decompose_continuous({}, empty);
  CHECK(verify_continuous({}, e));
}

TEST_CASE("decompose_continuous: Hermite part with higher-order pole") {
  VarSpec vs{1, 0};
  MultiPoly q = T(vs, 0) * T(vs, 0) + C(vs, 1);  // t^2+1
  // a = D(1/q) + 2 D(q)/q
  RatFunc g0 = RatFunc::reduce(C(vs, 1), q);
  std::vector<RatFunc> a{g0.derive(0) + RatFunc::constant(vs, Rat(2)) * log_deriv(q, 0)};
  ContinuousDecomp d = decompose_continuous(a, vs);
  CHECK(d.g0 == g0);
  REQUIRE(d.parts.size() == 1);
  CHECK(d.parts[0].first == 2);
  CHECK(d.parts[0].second == q);
}

TEST_CASE("decompose_continuous: fractional residues") {
  VarSpec vs{1, 0};
  MultiPoly q = T(vs, 0) * T(vs, 0) - C(vs, 2);  // t^2-2, roots irrational
  // t/(t^2-2) = (1/2) D(q)/q: residues are rational even though roots are not
  std::vector<RatFunc> a{RatFunc::reduce(T(vs, 0), q)};
  ContinuousDecomp d = decompose_continuous(a, vs);
  REQUIRE(d.parts.size() == 1);
  CHECK(d.parts[0].first == make_rat(1, 2));
  CHECK(d.parts[0].second == q);
}

TEST_CASE("decompose_continuous: irrational residue is refused") {
  VarSpec vs{1, 0};
  MultiPoly q = T(vs, 0) * T(vs, 0) - C(vs, 2);
  // 1/(t^2-2) has residues +-1/(2 sqrt 2)
  CHECK_THROWS_WITH_AS(decompose_continuous({RatFunc::reduce(C(vs, 1), q)}, vs),
                       doctest::Contains("residue"), Error);
}

TEST_CASE("decompose_continuous rejects bad input") {
  VarSpec vs{2, 0};
  CHECK_THROWS_AS(decompose_continuous({RF(T(vs, 1) * T(vs, 1)), RatFunc::zero(vs)}, vs),
                  Error);  // NotCompatible
  CHECK_THROWS_AS(decompose_continuous({RF(T(vs, 0))}, vs), Error);  // arity
  VarSpec mixed{1, 1};
  CHECK_THROWS_AS(decompose_continuous({RF(K(mixed, 0))}, mixed), Error);  // k-variable
}

TEST_CASE("verify_continuous flags tampering") {
  VarSpec vs{1, 0};
  MultiPoly den = T(vs, 0) * T(vs, 0) * T(vs, 0) + C(vs, 1);
  std::vector<RatFunc> a{RatFunc::reduce(C(vs, 3) * T(vs, 0) * T(vs, 0), den)};
  ContinuousDecomp d = decompose_continuous(a, vs);
  d.parts[0].first += 1;
  CHECK(!verify_continuous(a, d));
}

TEST_CASE("round trip on random continuous decompositions") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coef(-3, 3), nparts(0, 3), small(1, 3);
  for (int iter = 0; iter < 40; ++iter) {
    int m = 1 + (iter % 3);
    VarSpec vs{m, 0};
    CAPTURE(iter);

    // g0: polynomial plus 1/(squarefree denominator)
    MultiPoly q = random_nonzero_poly(vs, rng);
    RatFunc g0 = RF(random_poly(vs, rng));
    if (!q.is_constant()) g0 = g0 + RatFunc::reduce(C(vs, 1), q.primitive_part());

    std::vector<std::pair<Rat, MultiPoly>> parts;
    int np = nparts(rng);
    for (int p = 0; p < np; ++p) {
      MultiPoly g = random_nonzero_poly(vs, rng);
      if (g.is_constant()) continue;
      int c = coef(rng);
      if (c == 0) c = 1;
      parts.emplace_back(make_rat(c, small(rng)), g.primitive_part());
    }

    std::vector<RatFunc> a;
    for (int i = 0; i < m; ++i) {
      RatFunc ai = g0.derive(i);
      for (const auto& [gamma, g] : parts)
        ai = ai + RatFunc::constant(vs, gamma) * log_deriv(g, i);
      a.push_back(ai);
    }

    ContinuousDecomp d = decompose_continuous(a, vs);
    CHECK(verify_continuous(a, d));
    // The combined differential form of the log parts is recovered exactly
    // (individual g's may differ by splitting/merging of factors).
    for (int i = 0; i < m; ++i) CHECK(log_form(d.parts, vs, i) == log_form(parts, vs, i));
    for (const auto& [gamma, g] : d.parts) {
      CHECK(gamma != 0);
      CHECK(!g.is_constant());
      CHECK(g.content() == 1);
    }
  }
}
