#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "wzht/terms.hpp"

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "wzht/errors.hpp"

using namespace wzht;
using namespace wzht::testutil;

TEST_CASE("rising factorial three-case definition") {
  CHECK(rising(Rat(2), 3) == Rat(24));  // 2*3*4
  CHECK(rising(Rat(7), 0) == Rat(1));
  CHECK(rising(Rat(-5, 3), 0) == Rat(1));
  CHECK(rising(Rat(1), -1) == Rat(0));  // alpha in {1..-k}
  CHECK(rising(Rat(2), -2) == Rat(0));
  CHECK(rising(Rat(3), -2) == Rat(1, 2));  // 1/((3-1)(3-2))
  CHECK(rising(Rat(5), -2) == Rat(1) / Rat(12));       // 1/((5-1)(5-2))
  CHECK(rising(Rat(1, 2), -1) == Rat(-2));             // 1/(1/2 - 1)
  CHECK(rising(Rat(0), 3) == Rat(0));                  // forward product hits 0
  CHECK(rising(Rat(-2), 2) == Rat(2));                 // (-2)(-1)
}

TEST_CASE("nonvanishing rising factorial") {
  CHECK(rising_star(Rat(2), 3) == Rat(24));
  CHECK(rising_star(Rat(1), -1) == Rat(1));  // (1)_0 (0)_0
  CHECK(rising_star(Rat(0), 1) == Rat(1));   // (0)_0 (1)_0
  // Never zero, and equal to rising wherever rising is nonzero.
  for (long a = -3; a <= 3; ++a)
    for (long k = -6; k <= 6; ++k) {
      Rat r = rising(Rat(a), k), rs = rising_star(Rat(a), k);
      CHECK(rs != 0);
      if (r != 0) CHECK(r == rs);
    }
}

TEST_CASE("both factorials satisfy (k+a)T(k+1) = (k+a)^2 T(k)") {
  std::vector<Rat> alphas;
  for (long a = -3; a <= 3; ++a) alphas.emplace_back(a);
  alphas.push_back(Rat(1, 2));
  alphas.push_back(Rat(-1, 2));
  for (const Rat& a : alphas)
    for (long k = -6; k < 6; ++k) {
      Rat w = Rat(k) + a;
      CHECK(w * rising_star(a, k + 1) == w * w * rising_star(a, k));
      CHECK(w * rising(a, k + 1) == w * w * rising(a, k));
    }
}

TEST_CASE("factorial term evaluation") {
  FactorialTerm T = FactorialTerm::trivial(1);
  T.mu = {Rat(2)};
  CHECK(eval_factorial_term(T, {5}) == Rat(32));

  FactorialTerm F = FactorialTerm::trivial(1);
  F.num_parts.push_back({Rat(1), {Int(1)}});  // (1)*_k = k!
  CHECK(eval_factorial_term(F, {4}) == Rat(24));

  FactorialTerm G = FactorialTerm::trivial(2);
  G.num_parts.push_back({Rat(1), {Int(1), Int(-1)}});
  // (1)*_{-2} = (1)_0 (0)_{-1} = -1 by the case-2 formula.
  CHECK(eval_factorial_term(G, {0, 2}) == Rat(-1));
}

TEST_CASE("certificates_of matches the dictionary") {
  VarSpec vs{1, 1};
  // t^k: geometric factor h1 = t.
  StandardFormTerm tk = StandardFormTerm::trivial(vs);
  tk.h = {RatFunc::from_poly(T(vs, 0))};
  CertificateSystem c = certificates_of(tk);
  CHECK(c.a[0] == RatFunc::reduce(K(vs, 0), T(vs, 0)));
  CHECK(c.b[0] == RatFunc::from_poly(T(vs, 0)));

  // (2)*_k: one numerator part.
  StandardFormTerm rs = StandardFormTerm::trivial(vs);
  rs.T.num_parts.push_back({Rat(2), {Int(1)}});
  c = certificates_of(rs);
  CHECK(c.a[0].is_zero());
  CHECK(c.b[0] == RatFunc::from_poly(K(vs, 0) + C(vs, 2)));

  // Constant term.
  c = certificates_of(StandardFormTerm::trivial(vs));
  CHECK(c.a[0].is_zero());
  CHECK(c.b[0] == RatFunc::one(vs));

  // Formal parts: exp(t^2) and (t+1)^(1/3).
  StandardFormTerm fp = StandardFormTerm::trivial(vs);
  fp.g0 = RatFunc::from_poly(T(vs, 0) * T(vs, 0));
  fp.powers.emplace_back(Rat(1, 3), T(vs, 0) + C(vs, 1));
  c = certificates_of(fp);
  CHECK(c.a[0] == RatFunc::from_poly(Rat(2) * T(vs, 0)) +
                      RatFunc::reduce(C(vs, Rat(1, 3)), T(vs, 0) + C(vs, 1)));
  CHECK(c.b[0] == RatFunc::one(vs));

  StandardFormTerm zf = StandardFormTerm::trivial(vs);
  zf.f = RatFunc::zero(vs);
  CHECK_THROWS_AS(certificates_of(zf), Error);
}

TEST_CASE("certificates of a term are always compatible") {
  std::mt19937 rng(2024);
  VarSpec vs{2, 2};
  for (int iter = 0; iter < 25; ++iter) {
    StandardFormTerm term = StandardFormTerm::trivial(vs);
    term.f = RatFunc::from_poly(random_nonzero_poly(vs, rng));
    std::uniform_int_distribution<int> coin(0, 2), small(-2, 2);
    MultiPoly tp = T(vs, 0) + C(vs, 1 + coin(rng));
    term.powers.emplace_back(make_rat(small(rng), 3), tp);
    term.h = {RatFunc::from_poly(T(vs, 1) + C(vs, 1)), RatFunc::one(vs)};
    term.T.mu = {Rat(3), Rat(1, 2)};
    term.T.num_parts.push_back({Rat(small(rng)), {Int(1), Int(coin(rng) - 1)}});
    term.T.den_parts.push_back({Rat(1, 2), {Int(0), Int(1)}});
    CHECK(check_compatibility(certificates_of(term)).ok);
  }
}

TEST_CASE("normalize_standard moves denominator factors") {
  VarSpec vs2{0, 2};
  // f = 1/(k1-k2): moves entirely into the factorial term.
  StandardFormTerm t1 = StandardFormTerm::trivial(vs2);
  t1.f = RatFunc::reduce(C(vs2, 1), K(vs2, 0) - K(vs2, 1));
  StandardFormTerm n1 = normalize_standard(t1);
  CHECK(n1.f == RatFunc::one(vs2));
  REQUIRE(n1.T.num_parts.size() == 1);
  REQUIRE(n1.T.den_parts.size() == 1);
  CHECK(n1.T.num_parts[0].alpha == Rat(0));
  CHECK(n1.T.num_parts[0].v == std::vector<Int>{Int(1), Int(-1)});
  CHECK(n1.T.den_parts[0].alpha == Rat(1));
  CHECK(are_conjugate(certificates_of(t1), certificates_of(n1)));

  // f = 1/(t+1): becomes a formal power with gamma = -1.
  VarSpec vs{1, 1};
  StandardFormTerm t2 = StandardFormTerm::trivial(vs);
  t2.f = RatFunc::reduce(C(vs, 1), T(vs, 0) + C(vs, 1));
  StandardFormTerm n2 = normalize_standard(t2);
  CHECK(n2.f == RatFunc::one(vs));
  REQUIRE(n2.powers.size() == 1);
  CHECK(n2.powers[0].first == Rat(-1));
  CHECK(n2.powers[0].second == T(vs, 0) + C(vs, 1));
  CHECK(are_conjugate(certificates_of(t2), certificates_of(n2)));

  // Polynomial rational parts are untouched.
  StandardFormTerm t3 = StandardFormTerm::trivial(vs);
  t3.f = RatFunc::from_poly(K(vs, 0) + C(vs, 1));
  CHECK(normalize_standard(t3).f == t3.f);

  // Quadratic composed factor with irrational roots stays in f.
  StandardFormTerm t4 = StandardFormTerm::trivial(vs);
  t4.f = RatFunc::reduce(C(vs, 1), K(vs, 0) * K(vs, 0) - C(vs, 2));
  CHECK(normalize_standard(t4).f == t4.f);

  // Mixed denominator factor cannot be standardized.
  StandardFormTerm t5 = StandardFormTerm::trivial(vs);
  t5.f = RatFunc::reduce(C(vs, 1), T(vs, 0) + K(vs, 0));
  CHECK_THROWS_AS(normalize_standard(t5), Error);
}

TEST_CASE("normalize_standard preserves certificates on random inputs") {
  std::mt19937 rng(555);
  VarSpec vs{1, 2};
  std::uniform_int_distribution<int> small(-2, 2);
  for (int iter = 0; iter < 20; ++iter) {
    // Denominator assembled from pure-t and integer-linear factors.
    MultiPoly den = C(vs, 1);
    den = den * (T(vs, 0) + C(vs, 1 + (iter % 3)));
    den = den * (Rat(1 + iter % 2) * K(vs, 0) + Rat(small(rng)) * K(vs, 1) + C(vs, small(rng)));
    StandardFormTerm term = StandardFormTerm::trivial(vs);
    term.f = RatFunc::reduce(random_nonzero_poly(vs, rng), den);
    StandardFormTerm norm = normalize_standard(term);
    CHECK(are_conjugate(certificates_of(term), certificates_of(norm)));
  }
}

TEST_CASE("eval_term") {
  VarSpec vs{1, 1};
  // t^k / k! at t=2, k=3.
  StandardFormTerm term = StandardFormTerm::trivial(vs);
  term.h = {RatFunc::from_poly(T(vs, 0))};
  term.T.den_parts.push_back({Rat(1), {Int(1)}});
  EvalContext ctx{{Rat(2)}, Rat(1)};
  CHECK(eval_term(term, ctx, {3}) == Rat(4, 3));
  CHECK(eval_term(term, ctx, {0}) == Rat(1));

  // k = 0 with f = 1 returns the formal scale.
  EvalContext scaled{{Rat(2)}, Rat(7, 5)};
  StandardFormTerm formal = StandardFormTerm::trivial(vs);
  formal.g0 = RatFunc::from_poly(T(vs, 0));
  CHECK(eval_term(formal, scaled, {0}) == Rat(7, 5));

  // Pole of the rational part.
  VarSpec vs2{0, 2};
  StandardFormTerm pole = StandardFormTerm::trivial(vs2);
  pole.f = RatFunc::reduce(C(vs2, 1), K(vs2, 0) - K(vs2, 1));
  EvalContext ctx2{{}, Rat(1)};
  CHECK_THROWS_AS(eval_term(pole, ctx2, {1, 1}), Error);
  CHECK(eval_term(pole, ctx2, {2, 1}) == Rat(1));
}

TEST_CASE("pointwise shift relation of eval_term against certificates") {
  VarSpec vs{1, 1};
  StandardFormTerm term = StandardFormTerm::trivial(vs);
  term.f = RatFunc::from_poly(K(vs, 0) + C(vs, 2));
  term.h = {RatFunc::reduce(T(vs, 0), T(vs, 0) + C(vs, 1))};
  term.T.mu = {Rat(-3, 2)};
  term.T.num_parts.push_back({Rat(1, 2), {Int(1)}});
  CertificateSystem c = certificates_of(term);
  EvalContext ctx{{Rat(3)}, Rat(1)};
  for (long k = 0; k <= 8; ++k) {
    std::vector<Rat> point{Rat(3), Rat(k)};
    CHECK(eval_term(term, ctx, {k + 1}) == c.b[0].evaluate(point) * eval_term(term, ctx, {k}));
  }
}
