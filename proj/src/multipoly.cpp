#include "wzht/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <random>
#include <sstream>

namespace wzht {

MultiPoly MultiPoly::constant(VarSpec vs, const Rat& c) {
  MultiPoly p(vs);
  if (c != 0) p.terms_.emplace(Mono(vs.vars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(VarSpec vs, int var) {
  if (var < 0 || var >= vs.vars()) throw Error(ErrorCode::BadIndex, "variable index out of range");
  MultiPoly p(vs);
  Mono mono(vs.vars(), 0);
  mono[var] = 1;
  p.terms_.emplace(mono, Rat(1));
  return p;
}

MultiPoly MultiPoly::monomial(VarSpec vs, const Mono& mono, const Rat& c) {
  assert(static_cast<int>(mono.size()) == vs.vars());
  MultiPoly p(vs);
  if (c != 0) p.terms_.emplace(mono, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Mono& mono = terms_.begin()->first;
  return std::all_of(mono.begin(), mono.end(), [](int e) { return e == 0; });
}

Rat MultiPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  assert(is_constant());
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Mono& mono = terms_.rbegin()->first;
  int d = 0;
  for (int e : mono) d += e;
  return d;
}

int MultiPoly::degree_in(int var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono[var]);
  return d;
}

bool MultiPoly::depends_on(int var) const {
  for (const auto& [mono, c] : terms_)
    if (mono[var] > 0) return true;
  return false;
}

bool MultiPoly::depends_on_t() const {
  for (int i = 0; i < vs_.m; ++i)
    if (depends_on(i)) return true;
  return false;
}

bool MultiPoly::depends_on_k() const {
  for (int j = 0; j < vs_.n; ++j)
    if (depends_on(vs_.k_var(j))) return true;
  return false;
}

int MultiPoly::k_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [mono, c] : terms_) {
    int kd = 0;
    for (int j = 0; j < vs_.n; ++j) kd += mono[vs_.k_var(j)];
    d = std::max(d, kd);
  }
  return d;
}

Rat MultiPoly::leading_coeff() const {
  assert(!terms_.empty());
  return terms_.rbegin()->second;
}

Mono MultiPoly::leading_mono() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

Rat MultiPoly::coeff(const Mono& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Mono& mono, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vs_);
  for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  assert(vs_ == o.vs_);
  MultiPoly r = *this;
  for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  assert(vs_ == o.vs_);
  MultiPoly r = *this;
  for (const auto& [mono, c] : o.terms_) r.add_term(mono, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  assert(vs_ == o.vs_);
  MultiPoly r(vs_);
  const int nv = vs_.vars();
  Mono mono(nv);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (int v = 0; v < nv; ++v) mono[v] = ma[v] + mb[v];
      r.add_term(mono, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  MultiPoly r(vs_);
  if (c == 0) return r;
  for (const auto& [mono, coeff] : terms_) r.terms_.emplace(mono, coeff * c);
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  assert(e >= 0);
  MultiPoly acc = constant(vs_, Rat(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(vs_);
  for (const auto& [mono, c] : terms_) {
    if (mono[var] == 0) continue;
    Mono dm = mono;
    dm[var] -= 1;
    r.add_term(dm, c * Rat(mono[var]));
  }
  return r;
}

MultiPoly MultiPoly::shift_k(int j, long s) const {
  if (j < 0 || j >= vs_.n) throw Error(ErrorCode::BadIndex, "k-index out of range in shift");
  std::vector<long> sigma(vs_.n, 0);
  sigma[j] = s;
  return shift_k_vec(sigma);
}

MultiPoly MultiPoly::shift_k_vec(const std::vector<long>& sigma) const {
  assert(static_cast<int>(sigma.size()) == vs_.n);
  MultiPoly r = *this;
  for (int j = 0; j < vs_.n; ++j) {
    if (sigma[j] == 0) continue;
    int var = vs_.k_var(j);
    MultiPoly value = variable(vs_, var) + constant(vs_, Rat(sigma[j]));
    r = r.substitute(var, value);
  }
  return r;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
  assert(static_cast<int>(point.size()) == vs_.vars());
  Rat acc(0);
  for (const auto& [mono, c] : terms_) {
    Rat term = c;
    for (int v = 0; v < vs_.vars(); ++v)
      if (mono[v] > 0) term *= rat_pow(point[v], mono[v]);
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  assert(value.vs_ == vs_);
  // Horner over the univariate view in `var`.
  std::vector<MultiPoly> cs = coeffs_in(var);
  MultiPoly acc = zero(vs_);
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * value + *it;
  return acc;
}

MultiPoly MultiPoly::substitute_value(int var, const Rat& value) const {
  MultiPoly r(vs_);
  for (const auto& [mono, c] : terms_) {
    Mono rm = mono;
    int e = rm[var];
    rm[var] = 0;
    r.add_term(rm, c * rat_pow(value, e));
  }
  return r;
}

Rat MultiPoly::content() const {
  assert(!terms_.empty());
  Int num_gcd(0), den_lcm(1);
  for (const auto& [mono, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat cont(num_gcd, den_lcm);
  cont.canonicalize();
  if (leading_coeff() < 0) cont = -cont;
  return cont;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  Rat c = content();
  MultiPoly r(vs_);
  for (const auto& [mono, coeff] : terms_) r.terms_.emplace(mono, coeff / c);
  return r;
}

MultiPoly MultiPoly::k_homogeneous_part(int deg) const {
  MultiPoly r(vs_);
  for (const auto& [mono, c] : terms_) {
    int kd = 0;
    for (int j = 0; j < vs_.n; ++j) kd += mono[vs_.k_var(j)];
    if (kd == deg) r.terms_.emplace(mono, c);
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(int var) const {
  int d = std::max(degree_in(var), 0);
  std::vector<MultiPoly> cs(d + 1, zero(vs_));
  for (const auto& [mono, c] : terms_) {
    Mono rm = mono;
    int e = rm[var];
    rm[var] = 0;
    cs[e].add_term(rm, c);
  }
  return cs;
}

MultiPoly MultiPoly::from_coeffs(VarSpec vs, int var, const std::vector<MultiPoly>& coeffs) {
  MultiPoly r(vs);
  for (size_t e = 0; e < coeffs.size(); ++e) {
    for (const auto& [mono, c] : coeffs[e].terms_) {
      Mono rm = mono;
      assert(rm[var] == 0);
      rm[var] = static_cast<int>(e);
      r.add_term(rm, c);
    }
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::div_exact(const MultiPoly& a, const MultiPoly& b) {
  assert(a.vs_ == b.vs_);
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "exact division by zero");
  MultiPoly q(a.vs_), r = a;
  const Mono lb = b.leading_mono();
  const Rat lcb = b.leading_coeff();
  const int nv = a.vs_.vars();
  while (!r.is_zero()) {
    const Mono lr = r.leading_mono();
    Mono t(nv);
    bool divisible = true;
    for (int v = 0; v < nv; ++v) {
      t[v] = lr[v] - lb[v];
      if (t[v] < 0) {
        divisible = false;
        break;
      }
    }
    if (!divisible) return std::nullopt;
    Rat c = r.leading_coeff() / lcb;
    MultiPoly term = monomial(a.vs_, t, c);
    q = q + term;
    r = r - term * b;
  }
  return q;
}

MultiPoly MultiPoly::pseudo_rem(const MultiPoly& a, const MultiPoly& b, int var) {
  assert(a.vs_ == b.vs_);
  int db = b.degree_in(var);
  assert(db >= 0 && !b.is_zero());
  std::vector<MultiPoly> bc = b.coeffs_in(var);
  const MultiPoly& lcb = bc[db];
  MultiPoly r = a;
  int dr = r.degree_in(var);
  if (r.is_zero() || dr < db) {
    // Still scale per definition so that the pseudo-division identity holds.
    int e = std::max(a.degree_in(var) - db + 1, 0);
    return a * lcb.pow(e);
  }
  int steps = dr - db + 1;
  int done = 0;
  while (!r.is_zero() && (dr = r.degree_in(var)) >= db) {
    std::vector<MultiPoly> rc = r.coeffs_in(var);
    MultiPoly shift_mono = monomial(a.vs_, [&] {
      Mono mo(a.vs_.vars(), 0);
      mo[var] = dr - db;
      return mo;
    }(), Rat(1));
    r = r * lcb - rc[dr] * shift_mono * b;
    ++done;
  }
  // Pad the scaling to exactly lc^steps for a clean identity.
  for (; done < steps; ++done) r = r * lcb;
  return r;
}

MultiPoly MultiPoly::content_in(int var) const {
  std::vector<MultiPoly> cs = coeffs_in(var);
  MultiPoly g = zero(vs_);
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd(g, c);
    if (g.is_constant()) break;
  }
  if (g.is_zero()) return g;
  if (g.is_constant()) return constant(vs_, Rat(1));
  return g.primitive_part();
}

namespace {

int pick_main_var(const MultiPoly& a, const MultiPoly& b) {
  for (int v = a.varspec().vars() - 1; v >= 0; --v)
    if (a.depends_on(v) || b.depends_on(v)) return v;
  return -1;
}

Int int_height(const MultiPoly& p) {
  // max |coefficient| for an integer-coefficient polynomial
  Int h = 0;
  for (const auto& [mono, c] : p.terms()) {
    Int a = abs(c.get_num());
    if (a > h) h = a;
  }
  return h;
}

/// Componentwise minimum exponent vector over the support of p.
Mono min_exponents(const MultiPoly& p) {
  Mono m(p.varspec().vars(), 0);
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    if (first) {
      m = mono;
      first = false;
    } else {
      for (size_t v = 0; v < m.size(); ++v) m[v] = std::min(m[v], mono[v]);
    }
  }
  return m;
}

MultiPoly shift_down(const MultiPoly& p, const Mono& m) {
  MultiPoly r(p.varspec());
  for (const auto& [mono, c] : p.terms()) {
    Mono nm = mono;
    for (size_t v = 0; v < nm.size(); ++v) nm[v] -= m[v];
    r.add_term(nm, c);
  }
  return r;
}

// --- modular coprimality certificate ---------------------------------------
// Evaluating all variables but one at a random point mod a prime gives a
// univariate image whose gcd degree bounds the true gcd degree from above
// (valid whenever the leading coefficients survive the evaluation). A zero
// bound in every shared variable proves the gcd constant, which settles the
// common coprime case without any remainder sequence.

constexpr long kModPrime = 1000000007L;

long mod_mul(long a, long b) {
  return (long)((__int128)a * b % kModPrime);
}

long mod_of(const Int& z) { return (long)mpz_fdiv_ui(z.get_mpz_t(), kModPrime); }

long mod_inv(long a) {
  long t = 0, nt = 1, r = kModPrime, nr = a % kModPrime;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return t < 0 ? t + kModPrime : t;
}

/// Dense coefficient vector mod kModPrime of p in `var` with every other
/// variable set to vals[]; nullopt when a coefficient denominator vanishes.
std::optional<std::vector<long>> eval_mod_except(const MultiPoly& p, int var,
                                                 const std::vector<long>& vals) {
  std::vector<long> out(p.degree_in(var) + 1, 0);
  for (const auto& [mono, c] : p.terms()) {
    long dm = mod_of(c.get_den());
    if (dm == 0) return std::nullopt;
    long v = mod_mul(mod_of(c.get_num()), mod_inv(dm));
    for (size_t x = 0; x < mono.size(); ++x) {
      if ((int)x == var) continue;
      for (int e = 0; e < mono[x]; ++e) v = mod_mul(v, vals[x]);
    }
    out[mono[var]] = (out[mono[var]] + v) % kModPrime;
  }
  return out;
}

int mod_gcd_degree(std::vector<long> a, std::vector<long> b) {
  auto deg = [](const std::vector<long>& p) {
    int d = (int)p.size() - 1;
    while (d >= 0 && p[d] == 0) --d;
    return d;
  };
  int da = deg(a), db = deg(b);
  while (db >= 0) {
    // a mod b
    long inv = mod_inv(b[db]);
    for (int i = da; i >= db; --i) {
      long f = mod_mul(a[i], inv);
      if (f == 0) continue;
      for (int j = 0; j <= db; ++j)
        a[i - db + j] = (a[i - db + j] - mod_mul(f, b[j]) % kModPrime + kModPrime) % kModPrime;
    }
    a.swap(b);
    da = db;
    db = deg(b);
  }
  return da;
}

/// True only when the gcd of a and b is provably constant.
bool modular_coprime(const MultiPoly& a, const MultiPoly& b) {
  static thread_local std::mt19937_64 rng(0x5bd1e995u);
  std::uniform_int_distribution<long> pt(1, kModPrime - 2);
  const int nv = a.varspec().vars();
  for (int v = 0; v < nv; ++v) {
    if (!a.depends_on(v) || !b.depends_on(v)) continue;  // gcd is free of v
    bool proven = false;
    for (int attempt = 0; attempt < 4 && !proven; ++attempt) {
      std::vector<long> vals(nv);
      for (long& x : vals) x = pt(rng);
      auto ea = eval_mod_except(a, v, vals);
      auto eb = eval_mod_except(b, v, vals);
      if (!ea || !eb) continue;
      if (ea->back() == 0 || eb->back() == 0) continue;  // lc vanished
      proven = mod_gcd_degree(*ea, *eb) == 0;
      if (!proven && attempt == 3) return false;
    }
    if (!proven) return false;
  }
  return true;
}

bool divides_z(const MultiPoly& g, const MultiPoly& p) {
  auto q = MultiPoly::div_exact(p, g);
  if (!q) return false;
  for (const auto& [mono, c] : q->terms())
    if (c.get_den() != 1) return false;
  return true;
}

/// Heuristic gcd by evaluation at a large integer point and balanced base-xi
/// digit reconstruction (gcd over Z, integer content included; the content of
/// intermediate results encodes the evaluated part of the gcd, so it must not
/// be stripped). Inputs must have integer coefficients. Returns nullopt when
/// reconstruction fails; the caller falls back to a remainder sequence.
std::optional<MultiPoly> gcd_heuristic(const MultiPoly& a0, const MultiPoly& b0, int depth = 0) {
  const VarSpec vs = a0.varspec();
  if (depth > 16) return std::nullopt;
  // Split off the common monomial: gcd(x^ma a', x^mb b') = x^min(ma,mb) gcd(a', b').
  Mono ma = min_exponents(a0), mb = min_exponents(b0);
  Mono common(vs.vars(), 0);
  bool have_common = false;
  for (int v = 0; v < vs.vars(); ++v) {
    common[v] = std::min(ma[v], mb[v]);
    if (common[v] > 0) have_common = true;
  }
  MultiPoly a = shift_down(a0, ma);
  MultiPoly b = shift_down(b0, mb);
  MultiPoly mono_part = MultiPoly::monomial(vs, common, Rat(1));
  auto with_mono = [&](MultiPoly g) { return have_common ? g * mono_part : g; };

  if (a.is_constant() || b.is_constant()) {
    // gcd of the integer contents; structure is exhausted on one side.
    Int ga = 0, gb = 0;
    for (const auto& [mono, c] : a.terms()) mpz_gcd(ga.get_mpz_t(), ga.get_mpz_t(), c.get_num().get_mpz_t());
    for (const auto& [mono, c] : b.terms()) mpz_gcd(gb.get_mpz_t(), gb.get_mpz_t(), c.get_num().get_mpz_t());
    Int g;
    mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    return with_mono(MultiPoly::constant(vs, Rat(g)));
  }
  int var = pick_main_var(a, b);
  Int xi = 2 * std::min(int_height(a), int_height(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt, xi = xi * 3 / 2 + 17) {
    MultiPoly ea = a.substitute_value(var, Rat(xi));
    MultiPoly eb = b.substitute_value(var, Rat(xi));
    if (ea.is_zero() || eb.is_zero()) continue;
    std::optional<MultiPoly> gamma = gcd_heuristic(ea, eb, depth + 1);
    if (!gamma) continue;
    if (gamma->is_constant() && abs(gamma->constant_value()) == 1)
      return with_mono(MultiPoly::constant(vs, Rat(1)));
    // Reconstruct the candidate from balanced base-xi digits. The gcd degree
    // in `var` is at most min(deg a, deg b), which bounds the digit count.
    MultiPoly g = MultiPoly::zero(vs);
    MultiPoly rem = *gamma;
    int e = 0;
    bool ok = true;
    const int max_digits = std::min(a.degree_in(var), b.degree_in(var)) + 1;
    while (!rem.is_zero()) {
      if (++e > max_digits) {
        ok = false;
        break;
      }
      MultiPoly digit = MultiPoly::zero(vs);
      for (const auto& [mono, c] : rem.terms()) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), Int(c.get_num()).get_mpz_t(), xi.get_mpz_t());
        if (2 * r >= xi) r -= xi;
        if (r != 0) digit.add_term(mono, Rat(r));
      }
      Mono xv(vs.vars(), 0);
      xv[var] = e - 1;
      g = g + digit * MultiPoly::monomial(vs, xv, Rat(1));
      MultiPoly diff = rem - digit;
      rem = MultiPoly::zero(vs);
      for (const auto& [mono, c] : diff.terms()) rem.add_term(mono, c / Rat(xi));
    }
    if (!ok) continue;
    if (g.is_zero()) continue;
    bool deg_ok = true;
    for (int v = 0; v < vs.vars() && deg_ok; ++v)
      deg_ok = g.degree_in(v) <= std::min(a.degree_in(v), b.degree_in(v));
    if (!deg_ok) continue;
    if (divides_z(g, a) && divides_z(g, b)) return with_mono(g);
    // The raw reconstruction often carries spurious integer content picked up
    // from the evaluated images. Its primitive part is then a common divisor
    // but not certified greatest; accept it when the primitive cofactors are
    // provably coprime. The content part of the gcd over Z is recovered as
    // the integer gcd of the input contents; it must be kept because at
    // recursion depth > 0 it encodes already-evaluated factors of the gcd.
    MultiPoly gp = g.primitive_part();
    if (!gp.is_constant() && divides_z(gp, a) && divides_z(gp, b)) {
      auto qa = MultiPoly::div_exact(a, gp);
      auto qb = MultiPoly::div_exact(b, gp);
      if (qa && qb && modular_coprime(qa->primitive_part(), qb->primitive_part())) {
        Int cg;
        mpz_gcd(cg.get_mpz_t(), Int(a.content().get_num()).get_mpz_t(),
                Int(b.content().get_num()).get_mpz_t());
        return with_mono(gp * MultiPoly::constant(vs, Rat(cg)));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
  assert(a.vs_ == b.vs_);
  const VarSpec vs = a.vs_;
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return constant(vs, Rat(1));

  // Strip monomial content up front: gcd(x^ma a', x^mb b') =
  // x^min(ma,mb) gcd(a', b'). The coprimality certificate below cannot fire
  // while a common monomial is still in place.
  Mono ma = min_exponents(a), mb = min_exponents(b);
  Mono common(vs.vars(), 0);
  bool stripped = false, have_common = false;
  for (int v = 0; v < vs.vars(); ++v) {
    stripped = stripped || ma[v] > 0 || mb[v] > 0;
    common[v] = std::min(ma[v], mb[v]);
    have_common = have_common || common[v] > 0;
  }
  if (stripped) {
    MultiPoly g = gcd(shift_down(a, ma), shift_down(b, mb));
    return have_common ? g * monomial(vs, common, Rat(1)) : g;
  }

  MultiPoly pa0 = a.primitive_part();
  MultiPoly pb0 = b.primitive_part();
  if (modular_coprime(pa0, pb0)) return constant(vs, Rat(1));
  if (auto g = gcd_heuristic(pa0, pb0)) {
    if (g->is_constant()) return constant(vs, Rat(1));
    MultiPoly p = g->primitive_part();
    return p.leading_coeff() > 0 ? p : -p;
  }

  int var = pick_main_var(a, b);
  assert(var >= 0);
  if (!a.depends_on(var)) return gcd(a, b.content_in(var));
  if (!b.depends_on(var)) return gcd(a.content_in(var), b);

  MultiPoly ca = a.content_in(var);
  MultiPoly cb = b.content_in(var);
  MultiPoly pa = div_exact(a, ca)->primitive_part();
  MultiPoly pb = div_exact(b, cb)->primitive_part();
  MultiPoly cg = gcd(ca, cb);

  // Subresultant remainder sequence in `var` (Brown). Each pseudo-remainder
  // is divided by the known exact factor g*h^delta, which bounds coefficient
  // growth without the per-step content computation a primitive sequence
  // needs; the surviving content is stripped once at the end.
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  MultiPoly sg = constant(vs, Rat(1)), sh = constant(vs, Rat(1));
  while (true) {
    int delta = pa.degree_in(var) - pb.degree_in(var);
    MultiPoly r = pseudo_rem(pa, pb, var);
    if (r.is_zero()) break;
    if (!r.depends_on(var)) {
      // Nontrivial remainder free of the main variable: primitive parts coprime.
      return cg;
    }
    pa = pb;
    pb = *div_exact(r, sg * sh.pow(delta));
    sg = pa.coeffs_in(var)[pa.degree_in(var)];
    if (delta == 1)
      sh = sg;
    else if (delta > 1)
      sh = *div_exact(sg.pow(delta), sh.pow(delta - 1));
  }
  MultiPoly g = *div_exact(pb, pb.content_in(var));
  return (cg * g).primitive_part();
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Print from the leading term down.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    Rat ac = c > 0 ? c : Rat(-c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool any_var = false;
    std::ostringstream vars;
    for (int v = 0; v < vs_.vars(); ++v) {
      if (mono[v] == 0) continue;
      if (any_var) vars << "*";
      any_var = true;
      if (v < vs_.m)
        vars << "t" << (v + 1);
      else
        vars << "k" << (v - vs_.m + 1);
      if (mono[v] > 1) vars << "^" << mono[v];
    }
    if (!any_var) {
      out << rat_to_string(ac);
    } else {
      if (ac != 1) out << rat_to_string(ac) << "*";
      out << vars.str();
    }
  }
  return out.str();
}

}  // namespace wzht
