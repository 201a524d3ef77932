#pragma once

#include <random>

#include "wzht/multipoly.hpp"
#include "wzht/ratfunc.hpp"

namespace wzht::testutil {

inline MultiPoly T(VarSpec vs, int i) { return MultiPoly::variable(vs, vs.t_var(i)); }
inline MultiPoly K(VarSpec vs, int j) { return MultiPoly::variable(vs, vs.k_var(j)); }
inline MultiPoly C(VarSpec vs, long c) { return MultiPoly::constant(vs, Rat(c)); }
inline MultiPoly C(VarSpec vs, const Rat& c) { return MultiPoly::constant(vs, c); }

inline RatFunc RF(const MultiPoly& num, const MultiPoly& den) { return RatFunc::reduce(num, den); }
inline RatFunc RF(const MultiPoly& p) { return RatFunc::from_poly(p); }

/// Random sparse polynomial with small support, degree <= 2 per variable.
inline MultiPoly random_poly(VarSpec vs, std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  std::uniform_int_distribution<int> ed(0, 2);
  std::uniform_int_distribution<int> cd(-5, 5);
  MultiPoly p = MultiPoly::zero(vs);
  int terms = nt(rng);
  for (int s = 0; s < terms; ++s) {
    Mono mono(vs.vars(), 0);
    for (int v = 0; v < vs.vars(); ++v) mono[v] = ed(rng);
    int coef = cd(rng);
    if (coef != 0) p.add_term(mono, Rat(coef));
  }
  return p;
}

inline MultiPoly random_nonzero_poly(VarSpec vs, std::mt19937& rng, int max_terms = 4) {
  for (;;) {
    MultiPoly p = random_poly(vs, rng, max_terms);
    if (!p.is_zero()) return p;
  }
}

inline RatFunc random_ratfunc(VarSpec vs, std::mt19937& rng) {
  return RF(random_poly(vs, rng), random_nonzero_poly(vs, rng));
}

}  // namespace wzht::testutil
