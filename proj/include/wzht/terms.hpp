#pragma once

#include <utility>
#include <vector>

#include "wzht/certsys.hpp"
#include "wzht/ratfunc.hpp"

namespace wzht {

/// Rising factorial (alpha)_k for integer k: forward product for k >= 0,
/// inverted product for k < 0 when defined, otherwise 0.
Rat rising(const Rat& alpha, long k);

/// Nonvanishing rising factorial (alpha)*_k; agrees with (alpha)_k whenever
/// that is nonzero and is itself never zero.
Rat rising_star(const Rat& alpha, long k);

/// mu_1^{k_1}...mu_n^{k_n} * prod (alpha_i)*_{v_i.k} / prod (beta_j)*_{w_j.k}.
struct FactorialTerm {
  int n = 0;
  std::vector<Rat> mu;  // size n, entries nonzero
  struct Part {
    Rat alpha;
    std::vector<Int> v;  // length n
  };
  std::vector<Part> num_parts;
  std::vector<Part> den_parts;

  static FactorialTerm trivial(int n);
  void validate() const;
};

Rat eval_factorial_term(const FactorialTerm& T, const std::vector<long>& k);

/// Multiplicative term model: f * exp(g0) * prod g_l^{gamma_l} *
/// prod h_j^{k_j} * T. The exp and power factors are formal constructors;
/// no exponent laws are applied to them.
struct StandardFormTerm {
  VarSpec varspec;
  RatFunc f;
  RatFunc g0;                                     // in t
  std::vector<std::pair<Rat, MultiPoly>> powers;  // (gamma, g), g in t
  std::vector<RatFunc> h;                         // size n, in t, nonzero
  FactorialTerm T;

  static StandardFormTerm trivial(VarSpec vs);
  void validate() const;
};

/// Surrogate values for evaluation: concrete t-values plus one opaque scalar
/// standing in for the k-constant formal factors exp(g0) and g^gamma.
struct EvalContext {
  std::vector<Rat> t_values;
  Rat formal_scale = Rat(1);
};

/// The Table-1 dictionary: certificates of the full multiplicative term.
/// Throws ZeroRationalPart when f = 0.
CertificateSystem certificates_of(const StandardFormTerm& term);

/// Rewrites the rational part so its denominator keeps no pure-t factor and
/// no integer-linear-composed factor: pure-t factors move into the formal
/// powers with negative gamma; linear composed factors alpha + v.k move into
/// the factorial term via the conjugacy (alpha + v.k) = c * (alpha+1)*_{v.k}
/// / (alpha)*_{v.k}. Composed factors that are irreducible of degree >= 2
/// stay in f (their roots are irrational). Certificates are preserved.
/// Throws UnrefinedFactor when an unrefined denominator factor blocks the
/// rewrite.
StandardFormTerm normalize_standard(const StandardFormTerm& term);

/// Exact value at an integer k-point; throws PoleAt on vanishing
/// denominators of f or h, or a zero geometric base with negative exponent.
Rat eval_term(const StandardFormTerm& term, const EvalContext& ctx,
              const std::vector<long>& k);

}  // namespace wzht
