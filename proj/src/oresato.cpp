#include "wzht/oresato.hpp"

#include <algorithm>
#include <map>

#include "wzht/errors.hpp"
#include "wzht/factor.hpp"

namespace wzht {

RatFunc eval_at(const QPoly& p, const RatFunc& arg) {
  const VarSpec vs = arg.varspec();
  RatFunc acc = RatFunc::zero(vs);
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * arg + RatFunc::constant(vs, p.coeff(i));
  return acc;
}

RatFunc eval_at(const UniRat& r, const RatFunc& arg) {
  return eval_at(r.num, arg) / eval_at(r.den, arg);
}

RatFunc product_range(const UniRat& r, const RatFunc& base, long s, long t) {
  RatFunc acc = RatFunc::one(base.varspec());
  if (t >= s) {
    for (long l = s; l < t; ++l)
      acc = acc * eval_at(r, base + RatFunc::constant(base.varspec(), Rat(l)));
  } else {
    for (long l = t; l < s; ++l)
      acc = acc / eval_at(r, base + RatFunc::constant(base.varspec(), Rat(l)));
  }
  return acc;
}

namespace {

long to_long(const Int& z) { return mpz_get_si(z.get_mpz_t()); }

RatFunc direction_form(VarSpec vs, const std::vector<Int>& v) {
  MultiPoly p = MultiPoly::zero(vs);
  for (int j = 0; j < vs.n; ++j)
    p = p + Rat(v[j]) * MultiPoly::variable(vs, vs.k_var(j));
  return RatFunc::from_poly(p);
}

// Mean root of a monic polynomial; drops by s under z -> z + s.
Rat mean_root(const QPoly& q) {
  int d = q.degree();
  return d <= 0 ? Rat(0) : Rat(-q.coeff(d - 1)) / Rat(d);
}

// Shift-orbit of factors q(v.k + l) for one direction v and one monic
// irreducible q; ledger[j] maps the offset l to its exponent in b_j.
struct Orbit {
  std::vector<Int> v;
  QPoly q;
  std::vector<std::map<long, long>> ledger;
};

// chi_j(l): multiplicity of q(v.k + l) in prod_0^{v_j} q(v.k + l).
long chi(long l, long vj) {
  if (vj > 0) return (l >= 0 && l < vj) ? 1 : 0;
  if (vj < 0) return (l >= vj && l < 0) ? -1 : 0;
  return 0;
}

}  // namespace

std::vector<RatFunc> reconstruct_shift(const ShiftDecomp& d) {
  const VarSpec vs = d.varspec;
  std::vector<RatFunc> b;
  for (int j = 0; j < vs.n; ++j) {
    RatFunc bj = d.f.shift(j, 1) / d.f * RatFunc::constant(vs, d.mu[j]);
    for (const auto& part : d.parts)
      bj = bj * product_range(part.r, direction_form(vs, part.v), 0,
                              to_long(part.v[j]));
    b.push_back(bj);
  }
  return b;
}

ShiftDecomp decompose_shift(const std::vector<RatFunc>& b, VarSpec vs) {
  const int n = vs.n;
  if ((int)b.size() != n)
    throw Error(ErrorCode::ArityError, "expected one k-certificate per k-variable");
  for (const auto& f : b) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "zero k-certificate");
    if (f.depends_on_t())
      throw Error(ErrorCode::Unsupported, "decompose_shift expects input free of t");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(b[i] * b[j].shift(i, 1) == b[j] * b[i].shift(j, 1)))
        throw Error(ErrorCode::NotCompatible, "shift compatibility fails at pair (" +
                                                  std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + ")");

  ShiftDecomp out;
  out.varspec = vs;
  out.f = RatFunc::one(vs);
  out.mu.assign(n, Rat(1));
  if (n == 0) return out;

  // Collect every composed factor of every b_j into shift-orbits.
  std::vector<Orbit> orbits;
  for (int j = 0; j < n; ++j) {
    FactorList fl = factor_refine(b[j]);
    for (const auto& item : fl.items) {
      if (item.kind != FactorKind::Composed)
        throw Error(ErrorCode::UnrefinedFactor,
                    "factor resists direction decomposition: " + item.poly.to_string());
      QPoly q = item.base.monic();
      Orbit* home = nullptr;
      long offset = 0;
      for (auto& o : orbits) {
        if (o.v != item.dir || o.q.degree() != q.degree()) continue;
        Rat s = mean_root(o.q) - mean_root(q);
        if (!rat_is_integer(s)) continue;
        long sl = to_long(s.get_num());
        if (o.q.shift_arg(Rat(sl)) == q) {  // q(z) = o.q(z + sl)
          home = &o;
          offset = sl;
          break;
        }
      }
      if (!home) {
        orbits.push_back({item.dir, q, std::vector<std::map<long, long>>(n)});
        home = &orbits.back();
        offset = 0;
      }
      home->ledger[j][offset] += item.exp;
    }
  }

  for (auto& o : orbits) {
    // Re-origin at the smallest occurring offset; determinism of f.
    long lmin = 0;
    bool any = false;
    for (const auto& ej : o.ledger)
      for (const auto& [l, e] : ej)
        if (e != 0 && (!any || l < lmin)) lmin = l, any = true;
    if (!any) continue;
    if (lmin != 0) {
      o.q = o.q.shift_arg(Rat(lmin));
      for (auto& ej : o.ledger) {
        std::map<long, long> moved;
        for (const auto& [l, e] : ej) moved[l - lmin] = e;
        ej = std::move(moved);
      }
    }

    // Block exponent d from the total multiplicity seen by each shift.
    bool have_d = false;
    long d = 0;
    for (int j = 0; j < n; ++j) {
      long vj = to_long(o.v[j]);
      long sum = 0;
      for (const auto& [l, e] : o.ledger[j]) sum += e;
      if (vj == 0) {
        if (sum != 0)
          throw Error(ErrorCode::Internal, "orbit ledger inconsistent at fixed shift");
        continue;
      }
      if (sum % vj != 0)
        throw Error(ErrorCode::Internal, "orbit multiplicity not divisible by shift step");
      long dj = sum / vj;
      if (have_d && dj != d)
        throw Error(ErrorCode::Internal, "orbit block exponent disagrees across shifts");
      d = dj;
      have_d = true;
    }

    // Telescoping exponents c: E_j(l) = c(l - v_j) - c(l) + d*chi_j(l).
    int j0 = 0;
    while (to_long(o.v[j0]) == 0) ++j0;
    long g = to_long(o.v[j0]);
    std::map<long, long> ep;  // E_{j0} - d*chi_{j0}
    for (const auto& [l, e] : o.ledger[j0]) ep[l] = e;
    for (long l = std::min<long>(0, g); l < std::max<long>(0, g); ++l) ep[l] -= d * chi(l, g);
    std::map<long, long> c;
    if (!ep.empty()) {
      long lo = ep.begin()->first, hi = ep.rbegin()->first;
      auto cval = [&](long l) {
        auto it = c.find(l);
        return it == c.end() ? 0L : it->second;
      };
      if (g > 0)
        for (long l = lo; l <= hi; ++l) c[l] = cval(l - g) - (ep.count(l) ? ep[l] : 0);
      else
        for (long l = hi; l >= lo; --l) c[l] = cval(l - g) - (ep.count(l) ? ep[l] : 0);
      for (auto it = c.begin(); it != c.end();)
        it = it->second == 0 ? c.erase(it) : std::next(it);
    }
    // Cross-check the full ledger; failure means the solved c does not
    // terminate or another shift disagrees.
    for (int j = 0; j < n; ++j) {
      long vj = to_long(o.v[j]);
      std::map<long, long> expect;
      auto cval = [&](long l) {
        auto it = c.find(l);
        return it == c.end() ? 0L : it->second;
      };
      for (const auto& [l, e] : c) {
        expect[l + vj] += e;
        expect[l] -= e;
      }
      for (long l = std::min<long>(0, vj); l < std::max<long>(0, vj); ++l)
        expect[l] += d * chi(l, vj);
      for (const auto& [l, e] : o.ledger[j])
        if (e != (expect.count(l) ? expect[l] : 0))
          throw Error(ErrorCode::Internal, "orbit ledger has no telescoping solution");
      for (const auto& [l, e] : expect)
        if (e != 0 && !o.ledger[j].count(l))
          throw Error(ErrorCode::Internal, "orbit ledger has no telescoping solution");
    }

    for (const auto& [l, e] : c) {
      RatFunc piece = RatFunc::from_poly(
          expand_composed(vs, o.v, o.q.shift_arg(Rat(l))));
      out.f = out.f * piece.pow(e);
    }
    if (d != 0) {
      ShiftDecomp::Part* part = nullptr;
      for (auto& p : out.parts)
        if (p.v == o.v) part = &p;
      if (!part) {
        out.parts.push_back({o.v, UniRat{QPoly::constant(Rat(1)), QPoly::constant(Rat(1))}});
        part = &out.parts.back();
      }
      QPoly pw = QPoly::constant(Rat(1));
      for (long i = 0; i < (d > 0 ? d : -d); ++i) pw = pw * o.q;
      if (d > 0)
        part->r.num = part->r.num * pw;
      else
        part->r.den = part->r.den * pw;
      part->r = UniRat::reduce(part->r.num, part->r.den);
    }
  }
  out.parts.erase(std::remove_if(out.parts.begin(), out.parts.end(),
                                 [](const ShiftDecomp::Part& p) { return p.r.is_one(); }),
                  out.parts.end());

  // Remaining per-j constants become mu_j; anything non-constant is a bug.
  std::vector<RatFunc> recon = reconstruct_shift(out);
  for (int j = 0; j < n; ++j) {
    RatFunc ratio = b[j] / recon[j];
    if (!ratio.is_constant())
      throw Error(ErrorCode::Internal,
                  "shift decomposition residual is not constant: " + ratio.to_string());
    out.mu[j] = ratio.constant_value();
  }
  return out;
}

bool verify_shift(const std::vector<RatFunc>& b, const ShiftDecomp& d) {
  if (b.size() != (size_t)d.varspec.n || d.mu.size() != (size_t)d.varspec.n) return false;
  std::vector<RatFunc> recon = reconstruct_shift(d);
  for (size_t j = 0; j < b.size(); ++j)
    if (!(recon[j] == b[j])) return false;
  return true;
}

}  // namespace wzht
