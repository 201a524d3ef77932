#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "wzht/oresato.hpp"

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "wzht/certsys.hpp"
#include "wzht/errors.hpp"

using namespace wzht;
using namespace wzht::testutil;

namespace {

UniRat urat(std::vector<Rat> num, std::vector<Rat> den = {Rat(1)}) {
  return UniRat::reduce(QPoly(std::move(num)), QPoly(std::move(den)));
}

bool ss_compatible(const std::vector<RatFunc>& b) {
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j)
      if (!(b[i] * b[j].shift((int)i, 1) == b[j] * b[i].shift((int)j, 1))) return false;
  return true;
}

}  // namespace

TEST_CASE("product_range two-case definition") {
  VarSpec vs{0, 1};
  UniRat z = urat({Rat(0), Rat(1)});
  RatFunc k = RatFunc::from_poly(K(vs, 0));
  CHECK(product_range(z, k, 0, 2) == RatFunc::from_poly(K(vs, 0) * (K(vs, 0) + C(vs, 1))));
  CHECK(product_range(z, k, 0, -1) == RatFunc::reduce(C(vs, 1), K(vs, 0) - C(vs, 1)));
  CHECK(product_range(urat({Rat(3), Rat(2)}, {Rat(-1), Rat(1)}), k, 2, 2) == RatFunc::one(vs));
}

TEST_CASE("decompose_shift: b = k+1 (the certificate of k!)") {
  VarSpec vs{0, 1};
  std::vector<RatFunc> b{RatFunc::from_poly(K(vs, 0) + C(vs, 1))};
  ShiftDecomp d = decompose_shift(b, vs);
  CHECK(d.f == RatFunc::one(vs));
  CHECK(d.mu == std::vector<Rat>{Rat(1)});
  REQUIRE(d.parts.size() == 1);
  CHECK(d.parts[0].v == std::vector<Int>{Int(1)});
  CHECK(d.parts[0].r == urat({Rat(1), Rat(1)}));  // z + 1
  CHECK(verify_shift(b, d));
}

TEST_CASE("decompose_shift: the two-variable diagonal system") {
  VarSpec vs{0, 2};
  MultiPoly diff = K(vs, 0) - K(vs, 1);
  std::vector<RatFunc> b{RatFunc::reduce(diff + C(vs, 1), diff),
                         RatFunc::reduce(diff - C(vs, 1), diff)};
  ShiftDecomp d = decompose_shift(b, vs);
  CHECK(d.f == RatFunc::from_poly(diff));
  CHECK(d.mu == std::vector<Rat>{Rat(1), Rat(1)});
  CHECK(d.parts.empty());
  CHECK(verify_shift(b, d));
}

TEST_CASE("decompose_shift: constants and telescoping quadratics") {
  VarSpec vs{0, 2};
  std::vector<RatFunc> ones{RatFunc::one(vs), RatFunc::one(vs)};
  ShiftDecomp d = decompose_shift(ones, vs);
  CHECK(d.f == RatFunc::one(vs));
  CHECK(d.mu == std::vector<Rat>{Rat(1), Rat(1)});
  CHECK(d.parts.empty());
  CHECK(verify_shift(ones, d));

  VarSpec vs1{0, 1};
  MultiPoly q = K(vs1, 0) * K(vs1, 0) + C(vs1, 1);
  std::vector<RatFunc> b{Rat(2) * RatFunc::reduce(q, q.shift_k(0, 1))};
  ShiftDecomp e = decompose_shift(b, vs1);
  CHECK(e.f == RatFunc::reduce(C(vs1, 1), q));
  CHECK(e.mu == std::vector<Rat>{Rat(2)});
  CHECK(e.parts.empty());
  CHECK(verify_shift(b, e));
}

TEST_CASE("decompose_shift rejects bad inputs") {
  VarSpec vs{0, 2};
  std::vector<RatFunc> bad{RatFunc::from_poly(K(vs, 0)), RatFunc::from_poly(K(vs, 0))};
  CHECK_THROWS_AS(decompose_shift(bad, vs), Error);  // SS incompatible

  VarSpec vsm{1, 1};
  std::vector<RatFunc> td{RatFunc::from_poly(T(vsm, 0))};
  CHECK_THROWS_AS(decompose_shift(td, vsm), Error);  // depends on t

  std::vector<RatFunc> zero{RatFunc::zero(vs), RatFunc::one(vs)};
  CHECK_THROWS_AS(decompose_shift(zero, vs), Error);
}

TEST_CASE("verify_shift detects tampering") {
  VarSpec vs{0, 1};
  std::vector<RatFunc> b{RatFunc::from_poly(K(vs, 0) + C(vs, 1))};
  ShiftDecomp d = decompose_shift(b, vs);
  d.mu[0] = Rat(2);
  CHECK_FALSE(verify_shift(b, d));

  ShiftDecomp empty;
  empty.varspec = VarSpec{0, 0};
  empty.f = RatFunc::one(VarSpec{0, 0});
  CHECK(verify_shift({}, empty));
}

TEST_CASE("round trip on random shift decompositions") {
  std::mt19937 rng(8787);
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2), nparts(0, 3), pick(0, 2);
  for (int iter = 0; iter < 60; ++iter) {
    CAPTURE(iter);
    int n = 1 + (iter % 3);
    VarSpec vs{0, n};
    ShiftDecomp d;
    d.varspec = vs;
    d.f = RatFunc::one(vs);
    for (int j = 0; j < n; ++j) {
      int c = coef(rng);
      d.mu.push_back(c == 0 ? Rat(1) : make_rat(c, 1 + deg(rng)));
    }
    // f: a product of integer-linear-composed factors.
    static const std::vector<std::vector<long>> dirs{{1}, {1, -1}, {2, 1}, {1, 0, -1}, {0, 1, 1}};
    for (int s = 0; s < 2; ++s) {
      std::vector<long> dir = dirs[pick(rng) + (n == 1 ? 0 : (n == 2 ? 1 : 2))];
      dir.resize(n, 0);
      MultiPoly form = C(vs, coef(rng));
      for (int j = 0; j < n; ++j) form = form + Rat(dir[j]) * K(vs, j);
      MultiPoly piece = form * form + C(vs, 1 + deg(rng));  // irreducible, composed
      d.f = s == 0 ? d.f * RatFunc::from_poly(piece)
                   : d.f / RatFunc::from_poly(piece);
    }
    // Blocks: monic r_v of degree <= 3.
    int np = nparts(rng) % (n + 1);
    for (int p = 0; p < np; ++p) {
      std::vector<Int> v;
      bool nonzero = false;
      for (int j = 0; j < n; ++j) {
        int c = coef(rng) % 2;
        v.emplace_back(c);
        nonzero |= c != 0;
      }
      if (!nonzero) v[p % n] = 1;
      // normalize sign of first nonzero entry
      for (auto& x : v)
        if (x != 0) {
          if (x < 0)
            for (auto& y : v) y = -y;
          break;
        }
      bool dup = false;
      for (const auto& q : d.parts) dup |= q.v == v;
      if (dup) continue;
      std::vector<Rat> num{Rat(coef(rng)), Rat(1)};
      std::vector<Rat> den{Rat(coef(rng)), Rat(3 + deg(rng)), Rat(1)};
      d.parts.push_back({v, urat(num, den)});
    }
    std::vector<RatFunc> b = reconstruct_shift(d);
    REQUIRE(ss_compatible(b));
    ShiftDecomp back = decompose_shift(b, vs);
    CHECK(verify_shift(b, back));
    // Fixed point at certificate level.
    std::vector<RatFunc> b2 = reconstruct_shift(back);
    for (int j = 0; j < n; ++j) CHECK(b2[j] == b[j]);
  }
}
