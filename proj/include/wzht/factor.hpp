#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wzht/ratfunc.hpp"
#include "wzht/unipoly.hpp"

namespace wzht {

enum class FactorKind {
  PureT,           // depends on t-variables only
  Composed,        // r(v.k) for a primitive integer direction v, free of t
  KUnrefined,      // free of t but not recognized as composed
  MixedUnrefined,  // depends on both t and k, kept whole
};

const char* factor_kind_name(FactorKind k);

struct FactorItem {
  MultiPoly poly;  // non-constant, integer-primitive, positive leading coeff
  int exp = 1;     // negative for denominator factors
  FactorKind kind = FactorKind::MixedUnrefined;
  std::vector<Int> dir;  // Composed only: primitive, first nonzero entry > 0
  QPoly base;            // Composed only: poly = base(dir . k)
};

struct FactorList {
  VarSpec varspec;
  Rat unit = Rat(1);
  std::vector<FactorItem> items;

  RatFunc reconstruct() const;
  bool has_unrefined() const;
};

/// Squarefree decomposition over Q (Yun, one variable at a time; contents
/// recursed). Parts are primitive with positive leading coefficient; the
/// rational content is returned separately via factor_refine's unit.
std::vector<std::pair<MultiPoly, int>> squarefree_decompose(const MultiPoly& p);

/// Splits off the t-only content: p = g * rest with g the gcd over Q[t] of
/// the coefficients of p viewed as a polynomial in the k-variables.
std::pair<MultiPoly, MultiPoly> separate_t(const MultiPoly& p);

struct ComposedForm {
  std::vector<Int> v;  // primitive, first nonzero entry positive
  QPoly r;             // p = r(v . k)
};

/// Recognizes p (non-constant, free of t) as a univariate polynomial in an
/// integer linear form v.k; detection via constancy of gradient ratios.
std::optional<ComposedForm> direction_composed(const MultiPoly& p);

/// Expands r(v.k) back to a MultiPoly.
MultiPoly expand_composed(VarSpec vs, const std::vector<Int>& v, const QPoly& r);

/// Irreducible factorization over Q of a univariate polynomial (Zassenhaus:
/// modular factorization, Hensel lifting, subset recombination). Factors are
/// integer-primitive with positive leading coefficient; the rational unit is
/// not returned. Throws Unsupported above the degree guard.
inline constexpr int kMaxUnivariateDegree = 64;
std::vector<std::pair<QPoly, int>> factor_univariate(const QPoly& p);

/// Full refinement pipeline: content, squarefree decomposition, t-separation,
/// composed-direction extraction (including products of composed factors in
/// several directions) with univariate factorization of each base; leftovers
/// are kept whole and flagged unrefined.
FactorList factor_refine(const MultiPoly& p);
FactorList factor_refine(const RatFunc& f);

}  // namespace wzht
