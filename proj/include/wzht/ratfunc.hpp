#pragma once

#include <string>

#include "wzht/multipoly.hpp"

namespace wzht {

/// Reduced rational function over Q in the (t, k)-variables.
/// Normal form: gcd(num, den) = 1, den integer-primitive with positive
/// leading coefficient. Equality is structural equality of this form.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(VarSpec vs)
      : num_(MultiPoly::zero(vs)), den_(MultiPoly::constant(vs, Rat(1))) {}

  static RatFunc reduce(const MultiPoly& num, const MultiPoly& den);
  static RatFunc from_poly(const MultiPoly& p) {
    return reduce(p, MultiPoly::constant(p.varspec(), Rat(1)));
  }
  static RatFunc constant(VarSpec vs, const Rat& c) {
    return from_poly(MultiPoly::constant(vs, c));
  }
  static RatFunc variable(VarSpec vs, int var) {
    return from_poly(MultiPoly::variable(vs, var));
  }
  static RatFunc zero(VarSpec vs) { return RatFunc(vs); }
  static RatFunc one(VarSpec vs) { return constant(vs, Rat(1)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const VarSpec& varspec() const { return num_.varspec(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }
  bool is_polynomial() const { return den_.is_constant(); }

  bool depends_on(int var) const { return num_.depends_on(var) || den_.depends_on(var); }
  bool depends_on_t() const { return num_.depends_on_t() || den_.depends_on_t(); }
  bool depends_on_k() const { return num_.depends_on_k() || den_.depends_on_k(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  RatFunc pow(long e) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// d/dt_i via the quotient rule; i is the 0-based t-index.
  RatFunc derive(int i) const;
  /// k_j <- k_j + s; j is the 0-based k-index.
  RatFunc shift(int j, long s) const;
  RatFunc shift_vec(const std::vector<long>& sigma) const;

  /// Exact evaluation; throws PoleAt when the denominator vanishes.
  Rat evaluate(const std::vector<Rat>& point) const;

  std::string to_string() const;

 private:
  RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {}

  MultiPoly num_;
  MultiPoly den_;
};

inline RatFunc operator*(const Rat& c, const RatFunc& f) {
  return RatFunc::constant(f.varspec(), c) * f;
}

}  // namespace wzht
