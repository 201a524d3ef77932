#pragma once

#include <utility>
#include <vector>

#include "wzht/ratfunc.hpp"

namespace wzht {

/// Additive decomposition of a D-compatible pure-t certificate vector:
///   a_i = D_i(g0) + sum_l gamma_l D_i(g_l) / g_l   for i = 1..m.
/// The g_l are non-constant, pairwise coprime, integer-primitive with
/// positive leading coefficient; every gamma_l is nonzero. g0 is canonical:
/// when polynomial its constant term is zero.
struct ContinuousDecomp {
  VarSpec varspec;
  RatFunc g0;
  std::vector<std::pair<Rat, MultiPoly>> parts;

  static ContinuousDecomp trivial(VarSpec vs) {
    return {vs, RatFunc::zero(vs), {}};
  }
};

/// Decompose a list of m rational functions in the t-variables satisfying
/// D_i(a_j) = D_j(a_i). Throws NotCompatible when the precondition fails,
/// Unsupported when an input involves a k-variable, UnsupportedResidue when a
/// logarithmic residue is not a rational number.
ContinuousDecomp decompose_continuous(const std::vector<RatFunc>& a, VarSpec vs);

/// Exact check of the decomposition identity for every i.
bool verify_continuous(const std::vector<RatFunc>& a, const ContinuousDecomp& d);

}  // namespace wzht
