#include "wzht/terms.hpp"

#include "wzht/errors.hpp"
#include "wzht/factor.hpp"
#include "wzht/oresato.hpp"

namespace wzht {

Rat rising(const Rat& alpha, long k) {
  Rat acc(1);
  if (k >= 0) {
    for (long i = 0; i < k; ++i) acc *= alpha + Rat(i);
    return acc;
  }
  if (rat_is_integer(alpha) && alpha >= 1 && alpha <= Rat(-k)) return Rat(0);
  for (long i = 1; i <= -k; ++i) acc /= alpha - Rat(i);
  return acc;
}

Rat rising_star(const Rat& alpha, long k) {
  Rat r = rising(alpha, k);
  if (r != 0) return r;
  // Here alpha is an integer and (alpha)_k vanished; the companion cases.
  long a = mpz_get_si(alpha.get_num().get_mpz_t());
  if (a > 0) return rising(alpha, 1 - a) * rising(Rat(0), a + k);
  return rising(alpha, -a) * rising(Rat(1), a + k - 1);
}

FactorialTerm FactorialTerm::trivial(int n) {
  FactorialTerm T;
  T.n = n;
  T.mu.assign(n, Rat(1));
  return T;
}

void FactorialTerm::validate() const {
  if ((int)mu.size() != n)
    throw Error(ErrorCode::ArityError, "factorial term needs one mu per k-variable");
  for (const Rat& m : mu)
    if (m == 0) throw Error(ErrorCode::ZeroInput, "geometric base mu must be nonzero");
  for (const auto* parts : {&num_parts, &den_parts})
    for (const auto& p : *parts)
      if ((int)p.v.size() != n)
        throw Error(ErrorCode::ArityError, "integer-linear form has wrong length");
}

Rat eval_factorial_term(const FactorialTerm& T, const std::vector<long>& k) {
  T.validate();
  if ((int)k.size() != T.n)
    throw Error(ErrorCode::ArityError, "evaluation point has wrong length");
  Rat acc(1);
  for (int j = 0; j < T.n; ++j) acc *= rat_pow(T.mu[j], k[j]);
  auto dot = [&](const std::vector<Int>& v) {
    Int s(0);
    for (int j = 0; j < T.n; ++j) s += v[j] * k[j];
    return mpz_get_si(s.get_mpz_t());
  };
  for (const auto& p : T.num_parts) acc *= rising_star(p.alpha, dot(p.v));
  for (const auto& p : T.den_parts) acc /= rising_star(p.alpha, dot(p.v));
  return acc;
}

StandardFormTerm StandardFormTerm::trivial(VarSpec vs) {
  StandardFormTerm t;
  t.varspec = vs;
  t.f = RatFunc::one(vs);
  t.g0 = RatFunc::zero(vs);
  t.h.assign(vs.n, RatFunc::one(vs));
  t.T = FactorialTerm::trivial(vs.n);
  return t;
}

void StandardFormTerm::validate() const {
  if (f.is_zero()) throw Error(ErrorCode::ZeroRationalPart, "rational part is zero");
  if (g0.depends_on_k())
    throw Error(ErrorCode::ArityError, "exp argument must be free of k");
  for (const auto& [gamma, g] : powers) {
    (void)gamma;
    if (g.depends_on_k() || g.is_constant())
      throw Error(ErrorCode::ArityError, "power base must be non-constant and free of k");
  }
  if ((int)h.size() != varspec.n)
    throw Error(ErrorCode::ArityError, "need one geometric factor per k-variable");
  for (const auto& hj : h) {
    if (hj.is_zero()) throw Error(ErrorCode::ZeroInput, "geometric factor must be nonzero");
    if (hj.depends_on_k())
      throw Error(ErrorCode::ArityError, "geometric factor must be free of k");
  }
  if (T.n != varspec.n)
    throw Error(ErrorCode::ArityError, "factorial term arity mismatch");
  T.validate();
}

CertificateSystem certificates_of(const StandardFormTerm& term) {
  term.validate();
  const VarSpec vs = term.varspec;
  CertificateSystem c;
  c.varspec = vs;
  for (int i = 0; i < vs.m; ++i) {
    RatFunc ai = term.f.derive(i) / term.f + term.g0.derive(i);
    for (const auto& [gamma, g] : term.powers) {
      RatFunc gf = RatFunc::from_poly(g);
      ai = ai + RatFunc::constant(vs, gamma) * gf.derive(i) / gf;
    }
    for (int j = 0; j < vs.n; ++j)
      ai = ai + RatFunc::variable(vs, vs.k_var(j)) * term.h[j].derive(i) / term.h[j];
    c.a.push_back(ai);
  }
  for (int j = 0; j < vs.n; ++j) {
    RatFunc bj = term.f.shift(j, 1) / term.f *
                 RatFunc::constant(vs, term.T.mu[j]) * term.h[j];
    auto linear_block = [&](const FactorialTerm::Part& p) {
      MultiPoly form = MultiPoly::constant(vs, p.alpha);
      for (int l = 0; l < vs.n; ++l)
        form = form + Rat(p.v[l]) * MultiPoly::variable(vs, vs.k_var(l));
      UniRat z{QPoly(std::vector<Rat>{Rat(0), Rat(1)}), QPoly::constant(Rat(1))};
      return product_range(z, RatFunc::from_poly(form), 0,
                           mpz_get_si(p.v[j].get_mpz_t()));
    };
    for (const auto& p : term.T.num_parts) bj = bj * linear_block(p);
    for (const auto& p : term.T.den_parts) bj = bj / linear_block(p);
    c.b.push_back(bj);
  }
  return c;
}

StandardFormTerm normalize_standard(const StandardFormTerm& term) {
  term.validate();
  const VarSpec vs = term.varspec;
  StandardFormTerm out = term;
  FactorList fl = factor_refine(term.f);
  RatFunc f = RatFunc::constant(vs, fl.unit);
  for (const auto& item : fl.items) {
    if (item.exp > 0) {  // numerators are untouched by the standard form
      f = f * RatFunc::from_poly(item.poly).pow(item.exp);
      continue;
    }
    switch (item.kind) {
      case FactorKind::PureT:
        out.powers.emplace_back(Rat(item.exp), item.poly);
        break;
      case FactorKind::Composed: {
        if (item.base.degree() == 1) {
          // 1/(alpha + v.k) is conjugate to (alpha)*_{v.k} / (alpha+1)*_{v.k};
          // the leading coefficient of the base is a k-constant, dropped.
          Rat alpha = item.base.coeff(0) / item.base.coeff(1);
          for (int rep = 0; rep < -item.exp; ++rep) {
            out.T.num_parts.push_back({alpha, item.dir});
            out.T.den_parts.push_back({alpha + 1, item.dir});
          }
        } else {
          // Irreducible of degree >= 2: roots are irrational, so the move to
          // (alpha)*-parts is not available over Q; the factor stays in f.
          f = f * RatFunc::from_poly(item.poly).pow(item.exp);
        }
        break;
      }
      default:
        throw Error(ErrorCode::UnrefinedFactor,
                    "denominator factor is not pure-t and not integer-linear-composed: " +
                        item.poly.to_string());
    }
  }
  out.f = f;
  return out;
}

Rat eval_term(const StandardFormTerm& term, const EvalContext& ctx,
              const std::vector<long>& k) {
  term.validate();
  const VarSpec vs = term.varspec;
  if ((int)ctx.t_values.size() != vs.m || (int)k.size() != vs.n)
    throw Error(ErrorCode::ArityError, "evaluation point has wrong length");
  std::vector<Rat> point = ctx.t_values;
  for (long kj : k) point.emplace_back(kj);
  Rat acc = term.f.evaluate(point) * ctx.formal_scale;
  for (int j = 0; j < vs.n; ++j) {
    Rat hv = term.h[j].evaluate(point);
    if (hv == 0 && k[j] < 0)
      throw Error(ErrorCode::PoleAt, "zero geometric base with negative exponent");
    acc *= rat_pow(hv, k[j]);
  }
  return acc * eval_factorial_term(term.T, k);
}

}  // namespace wzht
