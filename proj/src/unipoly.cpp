#include "wzht/unipoly.hpp"

namespace wzht {

Rat resultant(const QPoly& a, const QPoly& b) {
  // res(a, b) with the Euclidean recursion
  //   res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} res(b, r),
  // where r = a mod b.
  if (a.is_zero() || b.is_zero()) return Rat(0);
  if (b.degree() == 0) return rat_pow(b.lc(), a.degree());
  if (a.degree() == 0) return rat_pow(a.lc(), b.degree());
  QPoly r = a.divmod(b).second;
  if (r.is_zero()) return Rat(0);
  Rat sign = (a.degree() % 2 == 1 && b.degree() % 2 == 1) ? Rat(-1) : Rat(1);
  return sign * rat_pow(b.lc(), a.degree() - r.degree()) * resultant(b, r);
}

UniRat UniRat::reduce(const QPoly& n, const QPoly& d) {
  if (d.is_zero()) throw Error(ErrorCode::ZeroDenominator, "univariate zero denominator");
  if (n.is_zero()) return {QPoly::zero(), QPoly::constant(Rat(1))};
  QPoly g = QPoly::gcd(n, d);
  QPoly nn = n.divmod(g).first;
  QPoly dd = d.divmod(g).first;
  Rat ilc = Rat(1) / dd.lc();
  return {nn.scale(ilc), dd.scale(ilc)};
}

}  // namespace wzht
