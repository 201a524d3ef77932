#pragma once

#include <vector>

#include "wzht/ratfunc.hpp"
#include "wzht/unipoly.hpp"

namespace wzht {

/// Structure of a shift-compatible family b_j in the k-variables:
///   b_j = (S_j(f)/f) * mu_j * prod_{v in V} prod_0^{v_j} r_v(v.k + l).
struct ShiftDecomp {
  VarSpec varspec;
  RatFunc f;
  std::vector<Rat> mu;  // size n, nonzero
  struct Part {
    std::vector<Int> v;  // primitive direction, length n
    UniRat r;            // monic num/den, coprime, not 1
  };
  std::vector<Part> parts;  // directions pairwise distinct
};

/// Evaluates a univariate rational function at a RatFunc argument.
RatFunc eval_at(const QPoly& p, const RatFunc& arg);
RatFunc eval_at(const UniRat& r, const RatFunc& arg);

/// Two-sided product prod_s^t r(base + l): forward product over s <= l < t,
/// inverted product over t <= l < s when t < s; empty when s = t.
RatFunc product_range(const UniRat& r, const RatFunc& base, long s, long t);

/// Certificates reconstructed from a ShiftDecomp (the Theorem identity).
std::vector<RatFunc> reconstruct_shift(const ShiftDecomp& d);

/// Decomposes a shift-compatible family of nonzero rational functions in k.
/// Throws NotCompatible when the pairwise shift conditions fail and
/// UnrefinedFactor when a k-factor resists direction decomposition.
ShiftDecomp decompose_shift(const std::vector<RatFunc>& b, VarSpec vs);

bool verify_shift(const std::vector<RatFunc>& b, const ShiftDecomp& d);

}  // namespace wzht
