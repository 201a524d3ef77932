#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "wzht/ratfunc.hpp"

namespace wzht {

/// Field adapters for the coefficient types used by UPoly. The *_like
/// factories take a prototype element so that coefficient types carrying
/// runtime structure (RatFunc's varspec) can be constructed generically.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static bool is_zero(const Rat& x) { return x == 0; }
  static Rat inv(const Rat& x) { return Rat(1) / x; }
  static Rat zero_like(const Rat&) { return Rat(0); }
  static Rat from_int_like(const Rat&, long n) { return Rat(n); }
};

template <>
struct FieldOps<RatFunc> {
  static bool is_zero(const RatFunc& x) { return x.is_zero(); }
  static RatFunc inv(const RatFunc& x) { return x.inverse(); }
  static RatFunc zero_like(const RatFunc& p) { return RatFunc::zero(p.varspec()); }
  static RatFunc from_int_like(const RatFunc& p, long n) {
    return RatFunc::constant(p.varspec(), Rat(n));
  }
};

/// Dense univariate polynomial over a field K.
template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly zero() { return UPoly(); }
  static UPoly constant(const K& k) { return UPoly(std::vector<K>{k}); }

  const std::vector<K>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const K& lc() const {
    assert(!c_.empty());
    return c_.back();
  }
  /// Coefficient of x^i; i out of range yields zero (requires nonzero poly
  /// for non-Rat K, to have a prototype).
  K coeff(int i) const {
    if (i >= 0 && i < static_cast<int>(c_.size())) return c_[i];
    if constexpr (std::is_same_v<K, Rat>) return Rat(0);
    assert(!c_.empty());
    return FieldOps<K>::zero_like(c_.front());
  }

  UPoly operator-() const {
    std::vector<K> r;
    r.reserve(c_.size());
    for (const K& x : c_) r.push_back(-x);
    return UPoly(std::move(r));
  }

  UPoly operator+(const UPoly& o) const {
    std::vector<K> r = c_.size() >= o.c_.size() ? c_ : o.c_;
    const std::vector<K>& s = c_.size() >= o.c_.size() ? o.c_ : c_;
    for (size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
    return UPoly(std::move(r));
  }

  UPoly operator-(const UPoly& o) const { return *this + (-o); }

  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<K> r(c_.size() + o.c_.size() - 1, FieldOps<K>::zero_like(c_.front()));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return UPoly(std::move(r));
  }

  UPoly scale(const K& k) const {
    std::vector<K> r;
    r.reserve(c_.size());
    for (const K& x : c_) r.push_back(x * k);
    return UPoly(std::move(r));
  }

  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  UPoly monic() const {
    if (is_zero()) return *this;
    return scale(FieldOps<K>::inv(lc()));
  }

  /// Euclidean division; requires o nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& o) const {
    assert(!o.is_zero());
    UPoly q, r = *this;
    K inv_lc = FieldOps<K>::inv(o.lc());
    while (!r.is_zero() && r.degree() >= o.degree()) {
      K c = r.lc() * inv_lc;
      UPoly term = UPoly::constant(c).mul_xk(r.degree() - o.degree());
      q = q + term;
      r = r - term * o;
    }
    return {q, r};
  }

  static UPoly gcd(UPoly a, UPoly b) {  // monic (or zero)
    while (!b.is_zero()) {
      UPoly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Fills (g, s, t) with s*a + t*b = g, g the monic gcd.
  static void ext_gcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t) {
    assert(!a.is_zero() || !b.is_zero());
    const K& proto = a.is_zero() ? b.lc() : a.lc();
    K one = FieldOps<K>::from_int_like(proto, 1);
    K zero = FieldOps<K>::zero_like(proto);
    UPoly r0 = a, r1 = b;
    UPoly s0 = constant(one), s1 = constant(zero);
    UPoly t0 = constant(zero), t1 = constant(one);
    while (!r1.is_zero()) {
      auto [q, r] = r0.divmod(r1);
      UPoly s2 = s0 - q * s1;
      UPoly t2 = t0 - q * t1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    K inv = FieldOps<K>::inv(r0.lc());
    g = r0.scale(inv);
    s = s0.scale(inv);
    t = t0.scale(inv);
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<K> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
      r.push_back(c_[i] * FieldOps<K>::from_int_like(c_[i], static_cast<long>(i)));
    return UPoly(std::move(r));
  }

  /// Antiderivative with constant term 0.
  UPoly integral() const {
    if (is_zero()) return UPoly();
    std::vector<K> r(c_.size() + 1, FieldOps<K>::zero_like(c_.front()));
    for (size_t i = 0; i < c_.size(); ++i)
      r[i + 1] =
          c_[i] * FieldOps<K>::inv(FieldOps<K>::from_int_like(c_[i], static_cast<long>(i) + 1));
    return UPoly(std::move(r));
  }

  K eval(const K& x) const {
    K acc = FieldOps<K>::zero_like(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Composition p(z + c).
  UPoly shift_arg(const K& c) const {
    if (is_zero() || FieldOps<K>::is_zero(c)) return *this;
    UPoly zc(std::vector<K>{c, FieldOps<K>::from_int_like(c, 1)});
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * zc + constant(*it);
    return acc;
  }

  UPoly mul_xk(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<K> r(c_.size() + k, FieldOps<K>::zero_like(c_.front()));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return UPoly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && FieldOps<K>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

using QPoly = UPoly<Rat>;

/// Resultant of two rational univariate polynomials via the subresultant-free
/// Euclidean recursion; fine at these sizes.
Rat resultant(const QPoly& a, const QPoly& b);

/// Univariate rational function over Q, stored as a num/den pair reduced to
/// gcd 1 with monic denominator.
struct UniRat {
  QPoly num;
  QPoly den = QPoly::constant(Rat(1));

  static UniRat reduce(const QPoly& n, const QPoly& d);
  UniRat operator*(const UniRat& o) const { return reduce(num * o.num, den * o.den); }
  bool operator==(const UniRat& o) const { return num == o.num && den == o.den; }
  bool is_one() const { return num == den; }
  /// Composition with z -> z + c.
  UniRat shift_arg(const Rat& c) const { return {num.shift_arg(c), den.shift_arg(c)}; }
};

}  // namespace wzht
