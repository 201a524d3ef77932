#pragma once

#include <optional>
#include <vector>

#include "wzht/rational.hpp"

namespace wzht {

/// Dense integer matrix, row-major. Small sizes only (dimensions bounded by
/// the number of discrete variables), so plain O(n^3) algorithms throughout.
struct IMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}
  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static IMat identity(int n);
  IMat mul(const IMat& o) const;
  std::vector<Int> mul_vec(const std::vector<Int>& v) const;
  bool operator==(const IMat& o) const = default;
};

/// Column-style Hermite normal form of M: returns H with the same column
/// span (as a lattice), H = M * U for unimodular U. H is lower-triangular
/// in the staircase sense with positive pivots and entries to the right of
/// each pivot reduced into [0, pivot). Zero columns are dropped, so H's
/// columns are a canonical basis of the column lattice.
IMat hnf_col(const IMat& m);

/// Basis of the integer kernel {x : M x = 0}; returned as columns of a matrix
/// (cols = kernel rank, possibly 0).
IMat int_kernel(const IMat& m);

/// One integer solution of M x = b, if any.
std::optional<std::vector<Int>> int_solve(const IMat& m, const std::vector<Int>& b);

/// Smith normal form: fills d (diagonal, d[i] | d[i+1], trailing zeros) and
/// unimodular U, V with U * M * V = diag(d).
void smith_normal_form(const IMat& m, std::vector<Int>& d, IMat& u, IMat& v);

/// Reduces x modulo the lattice spanned by the columns of basis (an HNF
/// basis from hnf_col), returning the canonical coset representative with
/// each pivot coordinate reduced into [0, pivot). Works over Q so callers
/// can reduce rational vectors against an integer lattice.
std::vector<Rat> lattice_coset_reduce(const IMat& basis, std::vector<Rat> x);

/// The saturation of the column lattice of m: {x in Z^r : c x in col-lat(m)
/// for some c != 0}. Returned as HNF basis columns.
IMat saturate(const IMat& m);

}  // namespace wzht
