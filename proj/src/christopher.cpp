#include "wzht/christopher.hpp"

#include <optional>
#include <random>
#include <set>
#include <string>

#include "wzht/errors.hpp"
#include "wzht/factor.hpp"
#include "wzht/unipoly.hpp"

namespace wzht {

namespace {

using RPoly = UPoly<RatFunc>;

RatFunc kc(VarSpec vs, const Rat& c) { return RatFunc::constant(vs, c); }

/// View of p as a dense polynomial in `var` with coefficients free of `var`.
RPoly to_rpoly(const MultiPoly& p, int var) {
  std::vector<RatFunc> out;
  for (const MultiPoly& c : p.coeffs_in(var)) out.push_back(RatFunc::from_poly(c));
  return RPoly(std::move(out));
}

RatFunc from_rpoly(const RPoly& p, VarSpec vs, int var) {
  RatFunc x = RatFunc::from_poly(MultiPoly::monomial(vs, [&] {
    Mono m(vs.vars(), 0);
    m[var] = 1;
    return m;
  }(), Rat(1)));
  RatFunc acc = RatFunc::zero(vs);
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
  return acc;
}

RPoly rpow(const RPoly& p, int e) {
  RPoly acc = RPoly::constant(FieldOps<RatFunc>::from_int_like(p.lc(), 1));
  for (int i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

/// Evaluate the coefficients of p at `pt`; nullopt when a coefficient
/// denominator vanishes there.
std::optional<QPoly> eval_rpoly(const RPoly& p, const std::vector<Rat>& pt) {
  if (p.is_zero()) return QPoly();
  std::vector<Rat> cs(p.degree() + 1, Rat(0));
  for (int i = 0; i <= p.degree(); ++i) {
    const RatFunc c = p.coeff(i);
    Rat dv = c.den().evaluate(pt);
    if (dv == 0) return std::nullopt;
    cs[i] = c.num().evaluate(pt) / dv;
  }
  return QPoly(std::move(cs));
}

QPoly lagrange(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  QPoly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    QPoly li = QPoly::constant(Rat(1));
    Rat denom(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      li = li * QPoly({-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    acc = acc + li.scale(ys[i] / denom);
  }
  return acc;
}

/// Rational candidates for the residues of A/Q: rational roots of the
/// Rothstein-Trager resultant Res_v(Q, A - z Q') after specializing the other
/// variables at `pt`, with the z-polynomial recovered by interpolation.
void residue_candidates(const QPoly& qe, const QPoly& ae, std::set<Rat>& cands) {
  QPoly qp = qe.derivative();
  int dz = qe.degree();
  std::vector<Rat> xs, ys;
  for (int j = 0; j <= dz; ++j) {
    xs.emplace_back(j);
    ys.push_back(resultant(qe, ae - qp.scale(Rat(j))));
  }
  QPoly rz = lagrange(xs, ys);
  if (rz.is_zero()) return;
  for (const auto& [fac, e] : factor_univariate(rz))
    if (fac.degree() == 1) cands.insert(-fac.coeff(0) / fac.coeff(1));
}

struct StagePiece {
  RatFunc g0_term;
  std::vector<std::pair<Rat, MultiPoly>> parts;
};

/// Logarithmic-part extraction for one squarefree piece A/Q. P is the same
/// block as a primitive squarefree multivariate polynomial, Q its monic view
/// in `var`. All residues must be rational; each residue class gamma yields
/// the factor gcd(P, A - gamma Q') taken at the polynomial level so the gcd
/// runs over Z rather than over the coefficient field.
void extract_log_parts(const RPoly& A, const RPoly& Q, const MultiPoly& P,
                       VarSpec vs, int var, StagePiece& out) {
  if (A.is_zero()) return;
  static thread_local std::mt19937 rng(0x9e3779b9u);
  std::uniform_int_distribution<long> pick(2, 997);
  RPoly qp = Q.derivative();
  std::set<Rat> cands;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Rat> pt(vs.vars(), Rat(1));
    for (int x = 0; x < vs.vars(); ++x)
      if (x != var) pt[x] = Rat(pick(rng));
    auto qe = eval_rpoly(Q, pt);
    auto ae = eval_rpoly(A, pt);
    if (!qe || !ae) continue;
    if (qe->degree() != Q.degree()) continue;
    if (QPoly::gcd(*qe, qe->derivative()).degree() != 0) continue;  // unlucky merge
    residue_candidates(*qe, *ae, cands);

    // P is primitive in var, so every gcd against it stays primitive; the
    // roots of Q where A - gamma Q' vanishes are the var-dependent common
    // factors with the numerator of A - gamma Q'.
    MultiPoly rem = P;
    std::vector<std::pair<Rat, MultiPoly>> found;
    for (const Rat& gamma : cands) {
      if (!rem.depends_on(var)) break;
      MultiPoly w = from_rpoly(A - qp.scale(kc(vs, gamma)), vs, var).num();
      MultiPoly g = MultiPoly::gcd(rem, w).primitive_part();
      if (!g.depends_on(var)) continue;
      found.emplace_back(gamma, g);
      rem = MultiPoly::div_exact(rem, g)->primitive_part();
    }
    if (rem.depends_on(var)) continue;  // missed residues; resample
    for (auto& [gamma, g] : found) {
      if (gamma == 0) continue;  // removable factor, no logarithmic content
      out.parts.emplace_back(gamma, std::move(g));
    }
    return;
  }
  throw Error(ErrorCode::UnsupportedResidue,
              "logarithmic residue outside Q in variable t" + std::to_string(var + 1));
}

/// Full single-variable reduction of `f` with respect to t_var: polynomial
/// antiderivative, Hermite reduction of the proper part, and residue
/// extraction of the squarefree remainder.
StagePiece reduce_stage(const RatFunc& f, VarSpec vs, int var) {
  StagePiece out{RatFunc::zero(vs), {}};
  RPoly N = to_rpoly(f.num(), var);
  RPoly D = to_rpoly(f.den(), var);
  auto [P, R] = N.divmod(D);
  if (!P.is_zero()) out.g0_term = out.g0_term + from_rpoly(P.integral(), vs, var);
  if (R.is_zero() || D.degree() == 0) return out;
  R = R.scale(FieldOps<RatFunc>::inv(D.lc()));
  D = D.monic();

  // Partial fractions over the pairwise coprime blocks Q^e. The squarefree
  // split runs on the multivariate denominator (integer arithmetic); factors
  // free of `var` belong to the coefficient field and are dropped along with
  // each block's var-free content.
  std::vector<std::pair<MultiPoly, int>> blocks;
  for (const auto& [p, e] : squarefree_decompose(f.den())) {
    if (!p.depends_on(var)) continue;
    blocks.emplace_back(
        MultiPoly::div_exact(p, p.content_in(var))->primitive_part(), e);
  }
  RPoly rest = D, cur = R;
  for (size_t idx = 0; idx < blocks.size(); ++idx) {
    const MultiPoly& Pb = blocks[idx].first;
    int e = blocks[idx].second;
    RPoly Q = to_rpoly(Pb, var).monic();
    RPoly F = rpow(Q, e);
    RPoly other = rest.divmod(F).first;
    RPoly A = cur;
    if (other.degree() > 0 || idx + 1 < blocks.size()) {
      RPoly g, s, t;
      RPoly::ext_gcd(F, other, g, s, t);  // s F + t other = 1
      A = (cur * t).divmod(F).second;
      cur = (cur - A * other).divmod(F).first;
      rest = other;
    }

    // Hermite: peel the exponent down to 1.
    RPoly qp = Q.derivative();
    RPoly gq, sq, tq;
    RPoly::ext_gcd(qp, Q, gq, sq, tq);  // sq qp = 1 mod Q
    while (e > 1) {
      RPoly C = (A * sq).divmod(Q).second;
      RPoly B = (A - C * qp).divmod(Q).first;
      Rat inv_e1 = Rat(1) / Rat(e - 1);
      out.g0_term = out.g0_term +
                    from_rpoly(C.scale(kc(vs, -inv_e1)), vs, var) /
                        from_rpoly(rpow(Q, e - 1), vs, var);
      A = B + C.derivative().scale(kc(vs, inv_e1));
      --e;
    }
    extract_log_parts(A, Q, Pb, vs, var, out);
  }
  return out;
}

RatFunc log_term(const MultiPoly& g, int i) {
  return RatFunc::reduce(g.derivative(i), g);
}

}  // namespace

ContinuousDecomp decompose_continuous(const std::vector<RatFunc>& a, VarSpec vs) {
  if (static_cast<int>(a.size()) != vs.m)
    throw Error(ErrorCode::ArityError, "expected " + std::to_string(vs.m) +
                                           " certificates, got " + std::to_string(a.size()));
  for (int i = 0; i < vs.m; ++i)
    if (a[i].num().depends_on_k() || a[i].den().depends_on_k())
      throw Error(ErrorCode::Unsupported,
                  "a_" + std::to_string(i + 1) + " involves a shift variable");
  for (int i = 0; i < vs.m; ++i)
    for (int j = i + 1; j < vs.m; ++j)
      if (!(a[j].derive(i) == a[i].derive(j)))
        throw Error(ErrorCode::NotCompatible, "D-compatibility fails at pair (" +
                                                  std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + ")");

  ContinuousDecomp d = ContinuousDecomp::trivial(vs);
  std::vector<RatFunc> res = a;
  for (int v = 0; v < vs.m; ++v) {
    if (res[v].is_zero()) continue;
    StagePiece piece = reduce_stage(res[v], vs, v);
    d.g0 = d.g0 + piece.g0_term;
    for (int i = v; i < vs.m; ++i) res[i] = res[i] - piece.g0_term.derive(i);
    for (const auto& [gamma, g] : piece.parts) {
      d.parts.emplace_back(gamma, g);
      for (int i = v; i < vs.m; ++i)
        res[i] = res[i] - kc(vs, gamma) * log_term(g, i);
    }
    if (!res[v].is_zero())
      throw Error(ErrorCode::Internal, "continuous stage residual nonzero");
    for (int i = v + 1; i < vs.m; ++i)
      if (res[i].num().depends_on(v) || res[i].den().depends_on(v))
        throw Error(ErrorCode::Internal, "continuous stage residual keeps t-variable");
  }

  // Merge duplicate logs, drop vanished ones.
  std::vector<std::pair<Rat, MultiPoly>> merged;
  for (const auto& [gamma, g] : d.parts) {
    bool hit = false;
    for (auto& [mg, mp] : merged)
      if (mp == g) {
        mg += gamma;
        hit = true;
        break;
      }
    if (!hit) merged.emplace_back(gamma, g);
  }
  std::erase_if(merged, [](const auto& p) { return p.first == 0; });
  d.parts = std::move(merged);

  // g0 is unique up to an additive constant; pin polynomial g0 at zero
  // constant term.
  if (!d.g0.is_zero() && d.g0.is_polynomial()) {
    Rat c = d.g0.num().coeff(Mono(vs.vars(), 0)) / d.g0.den().constant_value();
    if (c != 0) d.g0 = d.g0 - kc(vs, c);
  }

  if (!verify_continuous(a, d))
    throw Error(ErrorCode::Internal, "continuous decomposition failed self-check");
  return d;
}

bool verify_continuous(const std::vector<RatFunc>& a, const ContinuousDecomp& d) {
  if (static_cast<int>(a.size()) != d.varspec.m) return false;
  for (int i = 0; i < d.varspec.m; ++i) {
    RatFunc r = a[i] - d.g0.derive(i);
    for (const auto& [gamma, g] : d.parts)
      r = r - kc(d.varspec, gamma) * log_term(g, i);
    if (!r.is_zero()) return false;
  }
  return true;
}

}  // namespace wzht
