#include "wzht/ratfunc.hpp"

#include <cassert>

namespace wzht {

RatFunc RatFunc::reduce(const MultiPoly& num, const MultiPoly& den) {
  assert(num.varspec() == den.varspec());
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  VarSpec vs = num.varspec();
  if (num.is_zero()) return RatFunc(MultiPoly::zero(vs), MultiPoly::constant(vs, Rat(1)));
  MultiPoly g = MultiPoly::gcd(num, den);
  MultiPoly n = num, d = den;
  if (!g.is_constant()) {
    n = *MultiPoly::div_exact(n, g);
    d = *MultiPoly::div_exact(d, g);
  }
  Rat c = d.content();
  d = d * (Rat(1) / c);
  n = n * (Rat(1) / c);
  return RatFunc(std::move(n), std::move(d));
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return reduce(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return reduce(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return reduce(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero rational function");
  return reduce(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero");
  return reduce(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  VarSpec vs = varspec();
  if (e == 0) return one(vs);
  RatFunc base = e > 0 ? *this : inverse();
  long n = e > 0 ? e : -e;
  RatFunc acc = one(vs);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

RatFunc RatFunc::derive(int i) const {
  const VarSpec& vs = varspec();
  if (i < 0 || i >= vs.m) throw Error(ErrorCode::BadIndex, "t-index out of range in derive");
  int var = vs.t_var(i);
  return reduce(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::shift(int j, long s) const {
  const VarSpec& vs = varspec();
  if (j < 0 || j >= vs.n) throw Error(ErrorCode::BadIndex, "k-index out of range in shift");
  return reduce(num_.shift_k(j, s), den_.shift_k(j, s));
}

RatFunc RatFunc::shift_vec(const std::vector<long>& sigma) const {
  return reduce(num_.shift_k_vec(sigma), den_.shift_k_vec(sigma));
}

Rat RatFunc::evaluate(const std::vector<Rat>& point) const {
  Rat d = den_.evaluate(point);
  if (d == 0) throw Error(ErrorCode::PoleAt, "denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) {
    Rat c = den_.constant_value();
    if (c == 1) return num_.to_string();
    return "(" + num_.to_string() + ")/" + rat_to_string(c);
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace wzht
