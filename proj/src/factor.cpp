#include "wzht/factor.hpp"

#include <algorithm>
#include <set>

#include "wzht/errors.hpp"
#include "wzht/intlinalg.hpp"

namespace wzht {

const char* factor_kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::PureT:
      return "pure_t";
    case FactorKind::Composed:
      return "composed";
    case FactorKind::KUnrefined:
      return "k_unrefined";
    case FactorKind::MixedUnrefined:
      return "mixed_unrefined";
  }
  return "?";
}

RatFunc FactorList::reconstruct() const {
  RatFunc acc = RatFunc::constant(varspec, unit);
  for (const FactorItem& it : items) acc = acc * RatFunc::from_poly(it.poly).pow(it.exp);
  return acc;
}

bool FactorList::has_unrefined() const {
  return std::any_of(items.begin(), items.end(), [](const FactorItem& it) {
    return it.kind == FactorKind::KUnrefined || it.kind == FactorKind::MixedUnrefined;
  });
}

namespace {

void merge_parts(std::vector<std::pair<MultiPoly, int>>& into,
                 const std::vector<std::pair<MultiPoly, int>>& parts, int scale) {
  for (const auto& [q, e] : parts) {
    bool found = false;
    for (auto& [q2, e2] : into)
      if (q2 == q) {
        e2 += e * scale;
        found = true;
        break;
      }
    if (!found) into.emplace_back(q, e * scale);
  }
}

}  // namespace

std::vector<std::pair<MultiPoly, int>> squarefree_decompose(const MultiPoly& p) {
  std::vector<std::pair<MultiPoly, int>> out;
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "squarefree decomposition of zero");
  MultiPoly w = p.primitive_part();
  if (w.is_constant()) return out;

  int var = -1;
  for (int v = w.varspec().vars() - 1; v >= 0; --v)
    if (w.depends_on(v)) {
      var = v;
      break;
    }
  MultiPoly cont = w.content_in(var);
  MultiPoly pp = *MultiPoly::div_exact(w, cont);
  if (!cont.is_constant()) merge_parts(out, squarefree_decompose(cont), 1);

  // Yun with the derivation d/d(var); every factor of pp depends on var.
  MultiPoly da = pp.derivative(var);
  MultiPoly g = MultiPoly::gcd(pp, da);
  MultiPoly b = *MultiPoly::div_exact(pp, g);
  MultiPoly d = *MultiPoly::div_exact(da, g) - b.derivative(var);
  int mult = 0;
  while (!b.is_constant()) {
    ++mult;
    MultiPoly q = MultiPoly::gcd(b, d);
    if (!q.is_constant()) merge_parts(out, {{q.primitive_part(), 1}}, mult);
    b = (*MultiPoly::div_exact(b, q)).primitive_part();
    d = *MultiPoly::div_exact(d, q) - b.derivative(var);
  }
  return out;
}

std::pair<MultiPoly, MultiPoly> separate_t(const MultiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "separate_t of zero");
  const VarSpec vs = p.varspec();
  // group terms by the k-part of the exponent vector; gcd the t-coefficients
  std::map<Mono, MultiPoly> by_k;
  for (const auto& [mono, c] : p.terms()) {
    Mono kpart(vs.vars(), 0), tpart(vs.vars(), 0);
    for (int v = 0; v < vs.vars(); ++v) (vs.is_k(v) ? kpart[v] : tpart[v]) = mono[v];
    auto [it, inserted] = by_k.try_emplace(kpart, MultiPoly::zero(vs));
    it->second.add_term(tpart, c);
  }
  MultiPoly g = MultiPoly::zero(vs);
  for (const auto& [kpart, coeff] : by_k) {
    g = g.is_zero() ? coeff.primitive_part() : MultiPoly::gcd(g, coeff);
    if (g.is_constant()) break;
  }
  if (g.is_constant()) return {MultiPoly::constant(vs, Rat(1)), p};
  return {g, *MultiPoly::div_exact(p, g)};
}

MultiPoly expand_composed(VarSpec vs, const std::vector<Int>& v, const QPoly& r) {
  MultiPoly lin = MultiPoly::zero(vs);
  for (int j = 0; j < vs.n; ++j)
    if (v[j] != 0) lin.add_term([&] {
      Mono m(vs.vars(), 0);
      m[vs.k_var(j)] = 1;
      return m;
    }(), Rat(v[j]));
  MultiPoly acc = MultiPoly::zero(vs);
  for (auto it = r.coeffs().rbegin(); it != r.coeffs().rend(); ++it)
    acc = acc * lin + MultiPoly::constant(vs, *it);
  return acc;
}

std::optional<ComposedForm> direction_composed(const MultiPoly& p) {
  const VarSpec vs = p.varspec();
  if (p.is_constant() || p.depends_on_t()) return std::nullopt;
  const int n = vs.n;

  // gradient ratios: for p = r(v.k), dp/dk_i = v_i r'(v.k)
  std::vector<MultiPoly> grad(n, MultiPoly::zero(vs));
  int j0 = -1;
  for (int j = 0; j < n; ++j) {
    grad[j] = p.derivative(vs.k_var(j));
    if (j0 < 0 && !grad[j].is_zero()) j0 = j;
  }
  if (j0 < 0) return std::nullopt;
  std::vector<Rat> ratio(n, Rat(0));
  ratio[j0] = Rat(1);
  for (int j = 0; j < n; ++j) {
    if (j == j0 || grad[j].is_zero()) continue;
    Rat c = grad[j].leading_coeff() / grad[j0].leading_coeff();
    if (!(grad[j] == grad[j0] * c)) return std::nullopt;
    ratio[j] = c;
  }
  // primitive integer direction with positive first nonzero entry
  Int den_lcm = 1;
  for (const Rat& c : ratio)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> v(n);
  Int g = 0;
  for (int j = 0; j < n; ++j) {
    v[j] = Int(ratio[j].get_num()) * (den_lcm / Int(ratio[j].get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
  }
  for (Int& x : v) x /= g;
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }

  // w with v.w = 1 (exists since v is primitive), then r(z) = p(k = w z)
  std::vector<Int> w(n, Int(0));
  {
    Int acc = v[j0] < 0 ? -v[j0] : v[j0];
    w[j0] = v[j0] < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) {
      if (j == j0 || v[j] == 0) continue;
      Int gg, s, t;
      mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), acc.get_mpz_t(),
                 v[j].get_mpz_t());
      for (Int& x : w) x *= s;
      w[j] = t;
      acc = gg;
    }
  }
  // substitute k_j = w_j z: each monomial prod k_j^{e_j} -> (prod w_j^{e_j}) z^{sum e_j}
  std::map<int, Rat> rc;
  for (const auto& [mono, c] : p.terms()) {
    Rat coeff = c;
    int deg = 0;
    for (int j = 0; j < n; ++j) {
      int e = mono[vs.k_var(j)];
      if (e == 0) continue;
      if (w[j] == 0) {
        coeff = 0;
        break;
      }
      coeff *= Rat(rat_pow(Rat(w[j]), e));
      deg += e;
    }
    if (coeff != 0) rc[deg] += coeff;
  }
  int maxdeg = rc.empty() ? -1 : rc.rbegin()->first;
  std::vector<Rat> coeffs(maxdeg + 1, Rat(0));
  for (const auto& [deg, c] : rc) coeffs[deg] = c;
  QPoly r(coeffs);
  if (r.is_zero()) return std::nullopt;
  if (!(expand_composed(vs, v, r) == p)) return std::nullopt;
  return ComposedForm{v, r};
}

namespace {

/// Linear change of the k-variables: k = V y (V integer n x n); the
/// t-variables are untouched. Returns p expressed in the y-coordinates.
MultiPoly linear_k_change(const MultiPoly& p, const IMat& V) {
  const VarSpec vs = p.varspec();
  const int n = vs.n;
  std::vector<MultiPoly> images(n, MultiPoly::zero(vs));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (V.at(i, j) != 0) images[i].add_term([&] {
        Mono m(vs.vars(), 0);
        m[vs.k_var(j)] = 1;
        return m;
      }(), Rat(V.at(i, j)));
  MultiPoly acc = MultiPoly::zero(vs);
  for (const auto& [mono, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(vs, c);
    for (int v = 0; v < vs.m; ++v)
      if (mono[v] > 0) term = term * MultiPoly::variable(vs, v).pow(mono[v]);
    for (int i = 0; i < n; ++i)
      if (mono[vs.k_var(i)] > 0) term = term * images[i].pow(mono[vs.k_var(i)]);
    acc = acc + term;
  }
  return acc;
}

/// Content of p with respect to the k_1-coordinate: the product of factors
/// depending only on k_1 (used after a change of variables placing z = v.k
/// into the first discrete slot). Returned as a univariate QPoly in k_1.
QPoly z_only_part(const MultiPoly& p, VarSpec vs) {
  // view p as a polynomial in all variables except k_1; gcd the coefficients
  std::map<Mono, MultiPoly> groups;
  const int zvar = vs.k_var(0);
  for (const auto& [mono, c] : p.terms()) {
    Mono rest = mono;
    Mono zpart(vs.vars(), 0);
    zpart[zvar] = mono[zvar];
    rest[zvar] = 0;
    auto [it, ins] = groups.try_emplace(rest, MultiPoly::zero(vs));
    it->second.add_term(zpart, c);
  }
  MultiPoly g = MultiPoly::zero(vs);
  for (const auto& [rest, coeff] : groups) {
    g = g.is_zero() ? coeff.primitive_part() : MultiPoly::gcd(g, coeff);
    if (g.is_constant()) break;
  }
  if (g.is_constant()) return QPoly::constant(Rat(1));
  std::vector<Rat> c(g.degree_in(zvar) + 1, Rat(0));
  for (const auto& [mono, q] : g.terms()) c[mono[zvar]] = q;
  return QPoly(c);
}

void add_rational_roots(const QPoly& u, std::set<Rat>& roots) {
  if (u.degree() < 1) return;
  for (const auto& [f, e] : factor_univariate(u))
    if (f.degree() == 1) roots.insert(-f.coeff(0) / f.coeff(1));
}

/// Candidate directions for composed factors of a squarefree pure-k
/// polynomial, read off the linear factors of its leading k-homogeneous form.
void candidate_directions(const MultiPoly& L, std::vector<std::vector<Int>>& out,
                          std::vector<bool> active) {
  const VarSpec vs = L.varspec();
  const int n = vs.n;
  if (L.is_constant()) return;
  int i = -1;
  for (int j = 0; j < n; ++j)
    if (active[j] && L.depends_on(vs.k_var(j))) {
      i = j;
      break;
    }
  if (i < 0) return;
  MultiPoly cont = L.content_in(vs.k_var(i));
  MultiPoly pp = *MultiPoly::div_exact(L, cont);
  if (!cont.is_constant()) {
    std::vector<bool> sub = active;
    sub[i] = false;
    candidate_directions(cont, out, sub);
  }
  // every factor of pp involves k_i; specialize k_j = 1, the rest 0, and read
  // candidate ratios v_j / v_i = -root from rational roots in k_i
  std::vector<std::set<Rat>> ratios(n);
  ratios[i] = {Rat(1)};
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    if (!active[j] || !pp.depends_on(vs.k_var(j))) {
      ratios[j] = {Rat(0)};
      continue;
    }
    MultiPoly spec = pp;
    for (int l = 0; l < n; ++l)
      if (l != i) spec = spec.substitute_value(vs.k_var(l), l == j ? Rat(1) : Rat(0));
    std::set<Rat> roots;
    if (!spec.is_zero() && spec.depends_on(vs.k_var(i))) {
      std::vector<Rat> c(spec.degree_in(vs.k_var(i)) + 1, Rat(0));
      for (const auto& [mono, q] : spec.terms()) c[mono[vs.k_var(i)]] = q;
      try {
        add_rational_roots(QPoly(c), roots);
      } catch (const Error&) {
        // degree guard tripped; skip these candidates
      }
    }
    ratios[j] = {Rat(0)};
    for (const Rat& rho : roots) ratios[j].insert(-rho);
  }
  // cartesian product of the per-variable ratio choices
  std::vector<std::vector<Rat>> combos = {{}};
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<Rat>> next;
    for (const auto& base : combos)
      for (const Rat& rho : ratios[j]) {
        auto c = base;
        c.push_back(rho);
        next.push_back(std::move(c));
      }
    combos = std::move(next);
    if (combos.size() > 256) break;  // defensive cap
  }
  for (const auto& combo : combos) {
    if (static_cast<int>(combo.size()) != n) continue;
    Int den_lcm = 1;
    for (const Rat& c : combo)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> v(n);
    Int g = 0;
    for (int j = 0; j < n; ++j) {
      v[j] = Int(combo[j].get_num()) * (den_lcm / Int(combo[j].get_den()));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
    }
    if (g == 0) continue;
    for (Int& x : v) x /= g;
    for (const Int& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (Int& y : v) y = -y;
      break;
    }
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
}

/// Unimodular V with v . (V y) = y_1, i.e. the first y-coordinate becomes the
/// linear form v.k.
IMat completion_matrix(const std::vector<Int>& v) {
  const int n = static_cast<int>(v.size());
  IMat m(1, n);
  for (int j = 0; j < n; ++j) m.at(0, j) = v[j];
  std::vector<Int> d;
  IMat u, V;
  smith_normal_form(m, d, u, V);
  // u is 1x1 = ±1 and d[0] = 1 for primitive v, so v V = u00 e_1
  if (u.at(0, 0) < 0)
    for (int i = 0; i < n; ++i) V.at(i, 0) = -V.at(i, 0);
  return V;
}

void emit_composed(FactorList& fl, const MultiPoly& poly, int exp, const std::vector<Int>& v,
                   const QPoly& r) {
  FactorItem item;
  item.poly = poly;
  item.exp = exp;
  item.kind = FactorKind::Composed;
  item.dir = v;
  item.base = r;
  fl.items.push_back(std::move(item));
}

/// Splits a squarefree pure-k part into composed factors (possibly several
/// directions) plus an unrefined remainder.
void refine_pure_k(FactorList& fl, MultiPoly rest, int exp) {
  const VarSpec vs = rest.varspec();
  // whole-polynomial test first: canonical and cheap
  if (auto cf = direction_composed(rest)) {
    for (const auto& [ri, mi] : factor_univariate(cf->r)) {
      MultiPoly qi = expand_composed(vs, cf->v, ri).primitive_part();
      emit_composed(fl, qi, exp * mi, cf->v, ri);
    }
    return;
  }
  bool progress = true;
  while (progress && !rest.is_constant()) {
    progress = false;
    MultiPoly lead = rest.k_homogeneous_part(rest.k_degree()).primitive_part();
    std::vector<std::vector<Int>> cands;
    candidate_directions(lead, cands, std::vector<bool>(vs.n, true));
    for (const auto& v : cands) {
      IMat V = completion_matrix(v);
      MultiPoly changed = linear_k_change(rest, V);
      QPoly q = z_only_part(changed, vs);
      if (q.degree() < 1) continue;
      MultiPoly extracted = expand_composed(vs, v, q).primitive_part();
      auto quot = MultiPoly::div_exact(rest, extracted);
      if (!quot) continue;
      for (const auto& [ri, mi] : factor_univariate(q)) {
        MultiPoly qi = expand_composed(vs, v, ri).primitive_part();
        emit_composed(fl, qi, exp * mi, v, ri);
      }
      rest = quot->primitive_part();
      progress = true;
      break;
    }
  }
  if (!rest.is_constant()) {
    FactorItem item;
    item.poly = rest;
    item.exp = exp;
    item.kind = FactorKind::KUnrefined;
    fl.items.push_back(std::move(item));
  }
}

}  // namespace

FactorList factor_refine(const MultiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "factor_refine of zero");
  const VarSpec vs = p.varspec();
  FactorList fl;
  fl.varspec = vs;
  fl.unit = p.content();
  MultiPoly w = p.primitive_part();
  for (const auto& [q, e] : squarefree_decompose(w)) {
    auto [gt, rest] = separate_t(q);
    if (!gt.is_constant()) {
      FactorItem item;
      item.poly = gt.primitive_part();
      item.exp = e;
      item.kind = FactorKind::PureT;
      fl.items.push_back(std::move(item));
    }
    if (rest.is_constant()) {
      fl.unit *= rat_pow(rest.constant_value(), e);
      continue;
    }
    MultiPoly r = rest.primitive_part();
    fl.unit *= rat_pow(rest.content(), e);
    if (r.depends_on_t()) {
      FactorItem item;
      item.poly = r;
      item.exp = e;
      item.kind = r.depends_on_k() ? FactorKind::MixedUnrefined : FactorKind::PureT;
      fl.items.push_back(std::move(item));
    } else {
      refine_pure_k(fl, r, e);
    }
  }
  // the factors stored are primitive with positive lc; account for the
  // residual rational unit exactly
  RatFunc prod = RatFunc::constant(vs, fl.unit);
  for (const FactorItem& it : fl.items) prod = prod * RatFunc::from_poly(it.poly).pow(it.exp);
  RatFunc corr = RatFunc::from_poly(p) / prod;
  if (!corr.is_constant()) throw Error(ErrorCode::Internal, "factor_refine reconstruction drift");
  fl.unit *= corr.constant_value();
  return fl;
}

FactorList factor_refine(const RatFunc& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "factor_refine of zero");
  FactorList num = factor_refine(f.num());
  FactorList den = factor_refine(f.den());
  FactorList fl;
  fl.varspec = f.varspec();
  fl.unit = num.unit / den.unit;
  fl.items = std::move(num.items);
  for (FactorItem& it : den.items) {
    it.exp = -it.exp;
    fl.items.push_back(std::move(it));
  }
  return fl;
}

}  // namespace wzht
