#include <algorithm>
#include <random>

#include "wzht/errors.hpp"
#include "wzht/factor.hpp"

namespace wzht {

namespace {

// -- arithmetic mod a small prime, dense coefficient vectors in [0, p) --

using PPoly = std::vector<long>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PPoly& a) { return static_cast<int>(a.size()) - 1; }

PPoly padd(const PPoly& a, const PPoly& b, long p) {
  PPoly r = a.size() >= b.size() ? a : b;
  const PPoly& s = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < s.size(); ++i) r[i] = (r[i] + s[i]) % p;
  ptrim(r);
  return r;
}

PPoly psub(const PPoly& a, const PPoly& b, long p) {
  PPoly r = a;
  if (r.size() < b.size()) r.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
  ptrim(r);
  return r;
}

PPoly pmul(const PPoly& a, const PPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  ptrim(r);
  return r;
}

long pinv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return ((t % p) + p) % p;
}

PPoly pscale(const PPoly& a, long c, long p) {
  PPoly r = a;
  for (long& x : r) x = (x * (c % p)) % p;
  ptrim(r);
  return r;
}

PPoly pmonic(const PPoly& a, long p) {
  if (a.empty()) return a;
  return pscale(a, pinv(a.back(), p), p);
}

// division: a = q*b + r
void pdivmod(const PPoly& a, const PPoly& b, long p, PPoly& q, PPoly& r) {
  q.clear();
  r = a;
  long ilc = pinv(b.back(), p);
  while (pdeg(r) >= pdeg(b)) {
    long c = (r.back() * ilc) % p;
    int k = pdeg(r) - pdeg(b);
    if (static_cast<int>(q.size()) < k + 1) q.resize(k + 1, 0);
    q[k] = (q[k] + c) % p;
    for (size_t i = 0; i < b.size(); ++i) {
      size_t idx = i + k;
      r[idx] = ((r[idx] - c * b[i]) % p + p) % p;
    }
    ptrim(r);
    if (r.empty()) break;
  }
  ptrim(q);
}

PPoly pmod(const PPoly& a, const PPoly& b, long p) {
  PPoly q, r;
  if (pdeg(a) < pdeg(b)) return a;
  pdivmod(a, b, p, q, r);
  return r;
}

PPoly pgcd(PPoly a, PPoly b, long p) {
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a, p);
}

void pext_gcd(const PPoly& a, const PPoly& b, long p, PPoly& g, PPoly& s, PPoly& t) {
  PPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    PPoly q, r;
    pdivmod(r0, r1, p, q, r);
    PPoly s2 = psub(s0, pmul(q, s1, p), p);
    PPoly t2 = psub(t0, pmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  long ilc = pinv(r0.back(), p);
  g = pscale(r0, ilc, p);
  s = pscale(s0, ilc, p);
  t = pscale(t0, ilc, p);
}

PPoly pderiv(const PPoly& a, long p) {
  PPoly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back((a[i] * static_cast<long>(i % p)) % p);
  ptrim(r);
  return r;
}

PPoly ppowmod(const PPoly& base, const Int& e, const PPoly& f, long p) {
  PPoly acc = {1};
  PPoly b = pmod(base, f, p);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    acc = pmod(pmul(acc, acc, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = pmod(pmul(acc, b, p), f, p);
  }
  return acc;
}

// equal-degree splitting, Cantor-Zassenhaus; f monic squarefree, all
// irreducible factors of degree d, p odd
void edf(const PPoly& f, int d, long p, std::mt19937& rng, std::vector<PPoly>& out) {
  if (pdeg(f) == d) {
    out.push_back(f);
    return;
  }
  Int e = (rat_pow(Rat(p), d).get_num() - 1) / 2;
  std::uniform_int_distribution<long> coeff(0, p - 1);
  for (;;) {
    PPoly r(pdeg(f), 0);
    for (long& x : r) x = coeff(rng);
    ptrim(r);
    if (r.empty()) continue;
    PPoly s = ppowmod(r, e, f, p);
    s = psub(s, {1}, p);
    PPoly h = pgcd(f, s, p);
    if (pdeg(h) > 0 && pdeg(h) < pdeg(f)) {
      PPoly q, rem;
      pdivmod(f, h, p, q, rem);
      edf(h, d, p, rng, out);
      edf(pmonic(q, p), d, p, rng, out);
      return;
    }
  }
}

// distinct-degree then equal-degree factorization of a monic squarefree f
std::vector<PPoly> factor_mod_p(PPoly f, long p, std::mt19937& rng) {
  std::vector<PPoly> out;
  PPoly h = {0, 1};  // x
  int d = 0;
  while (pdeg(f) > 0) {
    ++d;
    if (2 * d > pdeg(f)) {
      out.push_back(f);  // remainder irreducible
      break;
    }
    h = ppowmod(h, Int(p), f, p);
    PPoly g = pgcd(f, psub(h, {0, 1}, p), p);
    if (pdeg(g) > 0) {
      edf(g, d, p, rng, out);
      PPoly q, r;
      pdivmod(f, g, p, q, r);
      f = pmonic(q, p);
      if (pdeg(f) > 0) h = pmod(h, f, p);
    }
  }
  return out;
}

// -- integer coefficient polynomials for Hensel lifting --

using ZPoly = std::vector<Int>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  if (r.size() < b.size()) r.resize(b.size(), Int(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  if (r.size() < b.size()) r.resize(b.size(), Int(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  ztrim(r);
  return r;
}

// coefficients reduced into [0, m)
ZPoly zmod(const ZPoly& a, const Int& m) {
  ZPoly r = a;
  for (Int& c : r) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(r);
  return r;
}

// balanced residues in (-m/2, m/2]
ZPoly zbalance(const ZPoly& a, const Int& m) {
  ZPoly r = zmod(a, m);
  for (Int& c : r) {
    if (2 * c > m) c -= m;
  }
  ztrim(r);
  return r;
}

// division by a monic polynomial, coefficients mod m
void zdivmod_monic(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
  q.clear();
  r = zmod(a, m);
  while (static_cast<int>(r.size()) >= static_cast<int>(b.size()) && !r.empty()) {
    Int c = r.back();
    int k = static_cast<int>(r.size()) - static_cast<int>(b.size());
    if (static_cast<int>(q.size()) < k + 1) q.resize(k + 1, Int(0));
    q[k] = (q[k] + c) % m;
    for (size_t i = 0; i < b.size(); ++i) {
      Int& x = r[i + k];
      x -= c * b[i];
      mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    }
    ztrim(r);
  }
  ztrim(q);
}

ZPoly from_ppoly(const PPoly& a) {
  ZPoly r;
  for (long c : a) r.emplace_back(c);
  return r;
}

/// Quadratic Hensel step chain: lifts f = g*h (mod p) with s*g + t*h = 1
/// (mod p) to modulus >= target; g, h monic. Returns lifted (g, h).
void hensel_pair(const ZPoly& f, ZPoly g, ZPoly h, ZPoly s, ZPoly t, const Int& p,
                 const Int& target, ZPoly& g_out, ZPoly& h_out) {
  Int m = p;
  while (m < target) {
    Int m2 = m * m;
    ZPoly e = zmod(zsub(f, zmul(g, h)), m2);
    ZPoly q, r;
    zdivmod_monic(zmul(s, e), h, m2, q, r);
    ZPoly g1 = zmod(zadd(g, zadd(zmul(t, e), zmul(q, g))), m2);
    ZPoly h1 = zmod(zadd(h, r), m2);
    ZPoly b = zmod(zsub(zadd(zmul(s, g1), zmul(t, h1)), {Int(1)}), m2);
    ZPoly c, d;
    zdivmod_monic(zmul(s, b), h1, m2, c, d);
    ZPoly s1 = zmod(zsub(s, d), m2);
    ZPoly t1 = zmod(zsub(t, zadd(zmul(t, b), zmul(c, g1))), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
    m = m2;
  }
  g_out = std::move(g);
  h_out = std::move(h);
}

/// Multifactor lifting: f monic with f = prod(parts) mod p; returns the parts
/// lifted mod >= target. Recursive halving tree.
void hensel_tree(const ZPoly& f, const std::vector<PPoly>& parts, long p, const Int& target,
                 std::vector<ZPoly>& out) {
  if (parts.size() == 1) {
    out.push_back(f);
    return;
  }
  size_t half = parts.size() / 2;
  PPoly gp = {1}, hp = {1};
  for (size_t i = 0; i < half; ++i) gp = pmul(gp, parts[i], p);
  for (size_t i = half; i < parts.size(); ++i) hp = pmul(hp, parts[i], p);
  PPoly gg, ss, tt;
  pext_gcd(gp, hp, p, gg, ss, tt);
  ZPoly g, h;
  hensel_pair(f, from_ppoly(gp), from_ppoly(hp), from_ppoly(ss), from_ppoly(tt), Int(p), target, g,
              h);
  hensel_tree(g, std::vector<PPoly>(parts.begin(), parts.begin() + half), p, target, out);
  hensel_tree(h, std::vector<PPoly>(parts.begin() + half, parts.end()), p, target, out);
}

QPoly qpoly_from_z(const ZPoly& a) {
  std::vector<Rat> c;
  for (const Int& x : a) c.emplace_back(x);
  return QPoly(c);
}

ZPoly zpoly_from_q_primitive(const QPoly& a) {
  // scale to integer-primitive with positive leading coefficient
  Int den_lcm = 1;
  for (const Rat& c : a.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly r;
  Int g = 0;
  for (const Rat& c : a.coeffs()) {
    Int x = Int(c.get_num()) * (den_lcm / Int(c.get_den()));
    r.push_back(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g != 0)
    for (Int& x : r) x /= g;
  if (!r.empty() && r.back() < 0)
    for (Int& x : r) x = -x;
  return r;
}

/// Irreducible factors of a primitive squarefree integer polynomial with
/// positive leading coefficient, degree >= 1.
std::vector<ZPoly> zassenhaus_squarefree(const ZPoly& f0) {
  int d = static_cast<int>(f0.size()) - 1;
  if (d == 1) return {f0};

  // make monic: G(x) = lc^(d-1) * f(x/lc), so G[i] = f[i] * lc^(d-1-i)
  const Int lc = f0.back();
  ZPoly G(f0.size());
  G[d] = 1;
  Int scale = 1;
  for (int i = d - 1; i >= 0; --i) {
    G[i] = f0[i] * scale;
    scale *= lc;
  }

  // pick a prime where G stays squarefree; prefer the factorization with the
  // fewest modular factors among a few working primes
  static const long primes[] = {3,  5,  7,  11, 13, 17, 19, 23,  29,  31,  37,  41,
                                43, 47, 53, 59, 61, 67, 71, 101, 131, 151, 181, 211};
  std::mt19937 rng(20240917);
  std::vector<PPoly> best;
  long best_p = 0;
  int tried = 0;
  for (long p : primes) {
    if (G.back() % p == 0) continue;  // monic, never
    PPoly gp;
    for (const Int& c : G) {
      Int r;
      mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
      gp.push_back(r.get_si());
    }
    ptrim(gp);
    if (pdeg(gp) != d) continue;
    PPoly der = pderiv(gp, p);
    if (der.empty()) continue;
    if (pdeg(pgcd(gp, der, p)) != 0) continue;
    std::vector<PPoly> parts = factor_mod_p(pmonic(gp, p), p, rng);
    if (best.empty() || parts.size() < best.size()) {
      best = parts;
      best_p = p;
    }
    if (++tried >= 3 || best.size() == 1) break;
  }
  if (best.empty()) throw Error(ErrorCode::Internal, "no suitable prime for factorization");
  if (best.size() == 1) return {f0};

  // Mignotte-style bound on factor coefficients of the monic G
  Int norm2 = 0;
  for (const Int& c : G) norm2 += c * c;
  Int norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Int bound = (norm + abs(G.back())) << d;
  Int target = 2 * bound + 1;

  Int modulus(best_p);
  while (modulus < target) modulus *= modulus;
  std::vector<ZPoly> lifted;
  hensel_tree(zmod(G, modulus), best, best_p, target, lifted);

  for (ZPoly& x : lifted) x = zbalance(x, modulus);

  // subset recombination
  std::vector<ZPoly> result;
  ZPoly rem = G;  // remaining monic polynomial to factor
  std::vector<ZPoly> pool = lifted;
  size_t take = 1;
  while (2 * take <= pool.size()) {
    // enumerate subsets of size `take`
    std::vector<size_t> idx(take);
    for (size_t i = 0; i < take; ++i) idx[i] = i;
    bool found = false;
    for (;;) {
      ZPoly cand = {Int(1)};
      for (size_t i : idx) cand = zbalance(zmul(cand, pool[i]), modulus);
      // trial division over Z (cand is monic)
      ZPoly q, r;
      q.clear();
      r = rem;
      while (static_cast<int>(r.size()) >= static_cast<int>(cand.size()) && !r.empty()) {
        Int c = r.back();
        int k = static_cast<int>(r.size()) - static_cast<int>(cand.size());
        if (static_cast<int>(q.size()) < k + 1) q.resize(k + 1, Int(0));
        q[k] += c;
        for (size_t i = 0; i < cand.size(); ++i) r[i + k] -= c * cand[i];
        ztrim(r);
      }
      if (r.empty()) {
        result.push_back(cand);
        rem = q;
        // drop used modular factors
        std::vector<ZPoly> np;
        for (size_t i = 0, j = 0; i < pool.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
          }
          np.push_back(pool[i]);
        }
        pool = std::move(np);
        found = true;
        break;
      }
      // next subset
      int pos = static_cast<int>(take) - 1;
      while (pos >= 0 && idx[pos] == pool.size() - take + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++take;
  }
  if (static_cast<int>(rem.size()) > 1) result.push_back(rem);

  // map back through x -> lc*x and take primitive parts
  std::vector<ZPoly> final_factors;
  for (const ZPoly& g : result) {
    ZPoly h(g.size());
    Int s = 1;
    for (size_t i = 0; i < g.size(); ++i) {
      h[i] = g[i] * s;
      s *= lc;
    }
    // primitive part
    Int cg = 0;
    for (const Int& c : h) mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), c.get_mpz_t());
    if (cg != 0)
      for (Int& c : h) c /= cg;
    if (h.back() < 0)
      for (Int& c : h) c = -c;
    final_factors.push_back(h);
  }
  return final_factors;
}

}  // namespace

std::vector<std::pair<QPoly, int>> factor_univariate(const QPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "factoring the zero polynomial");
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() == 0) return out;
  if (p.degree() > kMaxUnivariateDegree)
    throw Error(ErrorCode::Unsupported, "univariate degree above the factorization guard");

  // squarefree decomposition (Yun) over Q
  QPoly f = p.monic();
  QPoly df = f.derivative();
  QPoly a = QPoly::gcd(f, df);
  QPoly b = f.divmod(a).first;
  QPoly c = df.divmod(a).first;
  QPoly d = c - b.derivative();
  int mult = 0;
  while (b.degree() > 0) {
    ++mult;
    QPoly g = QPoly::gcd(b, d);
    if (g.degree() > 0) {
      ZPoly zg = zpoly_from_q_primitive(g);
      for (const ZPoly& irr : zassenhaus_squarefree(zg)) out.emplace_back(qpoly_from_z(irr), mult);
    }
    b = b.divmod(g).first;
    d = d.divmod(g).first - b.derivative();
  }
  return out;
}

}  // namespace wzht
