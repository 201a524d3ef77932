#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wzht/rational.hpp"

namespace wzht {

/// Variable layout: m continuous variables t1..tm, n discrete variables k1..kn.
/// A global variable index runs 0..m-1 for the t's and m..m+n-1 for the k's.
struct VarSpec {
  int m = 0;
  int n = 0;

  int vars() const { return m + n; }
  bool is_t(int var) const { return var >= 0 && var < m; }
  bool is_k(int var) const { return var >= m && var < m + n; }
  int t_var(int i) const { return i; }      // i in [0, m)
  int k_var(int j) const { return m + j; }  // j in [0, n)

  bool operator==(const VarSpec& o) const = default;
};

using Mono = std::vector<int>;

/// Graded lexicographic order with t1 < ... < tm < k1 < ... < kn.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse multivariate polynomial over Q. Terms are kept in grlex order and
/// never store a zero coefficient; the leading term is the grlex maximum.
class MultiPoly {
 public:
  using TermMap = std::map<Mono, Rat, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(VarSpec vs) : vs_(vs) {}

  static MultiPoly zero(VarSpec vs) { return MultiPoly(vs); }
  static MultiPoly constant(VarSpec vs, const Rat& c);
  static MultiPoly variable(VarSpec vs, int var);
  static MultiPoly monomial(VarSpec vs, const Mono& mono, const Rat& c);

  const VarSpec& varspec() const { return vs_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()

  int total_degree() const;      // -1 for the zero polynomial
  int degree_in(int var) const;  // -1 for the zero polynomial
  bool depends_on(int var) const;
  bool depends_on_t() const;
  bool depends_on_k() const;
  /// Total degree counting only the k-variables.
  int k_degree() const;

  Rat leading_coeff() const;  // requires nonzero
  Mono leading_mono() const;  // requires nonzero
  Rat coeff(const Mono& mono) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& c) const;
  MultiPoly pow(int e) const;  // e >= 0
  bool operator==(const MultiPoly& o) const { return vs_ == o.vs_ && terms_ == o.terms_; }

  MultiPoly derivative(int var) const;
  /// Substitution k_j <- k_j + s for the j-th discrete variable (0-based).
  MultiPoly shift_k(int j, long s) const;
  /// Shift by an integer vector in the k-variables.
  MultiPoly shift_k_vec(const std::vector<long>& sigma) const;

  Rat evaluate(const std::vector<Rat>& point) const;  // point.size() == vars()
  MultiPoly substitute(int var, const MultiPoly& value) const;
  MultiPoly substitute_value(int var, const Rat& value) const;

  /// Rational content: the positive rational c such that p/c has coprime
  /// integer coefficients, carrying the sign of the leading coefficient.
  Rat content() const;  // requires nonzero
  MultiPoly primitive_part() const;

  /// Homogeneous component of the given total degree in the k-variables
  /// (the t-variables contribute to coefficients, not to the grading).
  MultiPoly k_homogeneous_part(int deg) const;

  // Univariate view with respect to one variable.
  std::vector<MultiPoly> coeffs_in(int var) const;  // index = exponent of var
  static MultiPoly from_coeffs(VarSpec vs, int var, const std::vector<MultiPoly>& coeffs);

  static std::optional<MultiPoly> div_exact(const MultiPoly& a, const MultiPoly& b);
  /// lc(b,var)^(deg a - deg b + 1) * a = q*b + r with deg_var(r) < deg_var(b).
  static MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, int var);
  /// Primitive, positive-leading gcd; constants are units (gcd = 1).
  static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

  /// Content with respect to one variable: gcd of the coefficients of the
  /// powers of `var` (a polynomial free of `var`).
  MultiPoly content_in(int var) const;

  std::string to_string() const;

  void add_term(const Mono& mono, const Rat& c);  // accumulates, drops zeros

 private:
  VarSpec vs_;
  TermMap terms_;
};

inline MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

}  // namespace wzht
