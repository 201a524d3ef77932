#include "wzht/intlinalg.hpp"

#include <cstdlib>
#include <utility>

#include "wzht/errors.hpp"

namespace wzht {

IMat IMat::identity(int n) {
  IMat r(n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}

IMat IMat::mul(const IMat& o) const {
  IMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

std::vector<Int> IMat::mul_vec(const std::vector<Int>& v) const {
  std::vector<Int> r(rows, Int(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
  return r;
}

namespace {

IMat transpose(const IMat& m) {
  IMat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

void col_swap(IMat& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

void col_addmul(IMat& m, int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, dst) += q * m.at(i, src);
}

void col_neg(IMat& m, int j) {
  for (int i = 0; i < m.rows; ++i) m.at(i, j) = -m.at(i, j);
}

/// Unimodular 2x2 transform [col a, col b] <- [col a, col b] * T on both h
/// and the optional transform accumulator u.
void col_pair_transform(IMat& h, IMat* u, int ca, int cb, const Int& t00, const Int& t10,
                        const Int& t01, const Int& t11) {
  auto apply = [&](IMat& m) {
    for (int i = 0; i < m.rows; ++i) {
      Int x = m.at(i, ca), y = m.at(i, cb);
      m.at(i, ca) = t00 * x + t10 * y;
      m.at(i, cb) = t01 * x + t11 * y;
    }
  };
  apply(h);
  if (u) apply(*u);
}

/// Column echelon elimination via unimodular column operations; returns the
/// rank (columns [rank, cols) end up identically zero). Tracks the column
/// transform in u when given, and when `canonical` reduces off-pivot entries
/// into [0, pivot) yielding the HNF.
int col_echelon(IMat& h, IMat* u, bool canonical) {
  int c = 0;
  for (int i = 0; i < h.rows && c < h.cols; ++i) {
    int piv = -1;
    for (int j = c; j < h.cols; ++j)
      if (h.at(i, j) != 0) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    col_swap(h, c, piv);
    if (u) col_swap(*u, c, piv);
    for (int j = c + 1; j < h.cols; ++j) {
      if (h.at(i, j) == 0) continue;
      Int a = h.at(i, c), b = h.at(i, j), g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      col_pair_transform(h, u, c, j, p, q, -b / g, a / g);
    }
    if (h.at(i, c) < 0) {
      col_neg(h, c);
      if (u) col_neg(*u, c);
    }
    if (canonical) {
      const Int& d = h.at(i, c);
      for (int j = 0; j < c; ++j) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), d.get_mpz_t());
        col_addmul(h, j, c, -q);
        if (u) col_addmul(*u, j, c, -q);
      }
    }
    ++c;
  }
  return c;
}

IMat take_cols(const IMat& m, int from, int to) {
  IMat r(m.rows, to - from);
  for (int i = 0; i < m.rows; ++i)
    for (int j = from; j < to; ++j) r.at(i, j - from) = m.at(i, j);
  return r;
}

}  // namespace

IMat hnf_col(const IMat& m) {
  IMat h = m;
  int rank = col_echelon(h, nullptr, true);
  return take_cols(h, 0, rank);
}

IMat int_kernel(const IMat& m) {
  IMat h = m;
  IMat u = IMat::identity(m.cols);
  int rank = col_echelon(h, &u, false);
  IMat ker = take_cols(u, rank, m.cols);
  if (ker.cols == 0) return ker;
  return hnf_col(ker);
}

void smith_normal_form(const IMat& m, std::vector<Int>& d, IMat& u, IMat& v) {
  IMat a = m;
  u = IMat::identity(m.rows);
  v = IMat::identity(m.cols);

  auto row_swap = [&](IMat& x, int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < x.cols; ++j) std::swap(x.at(r1, j), x.at(r2, j));
  };
  auto row_addmul = [&](IMat& x, int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < x.cols; ++j) x.at(dst, j) += q * x.at(src, j);
  };
  auto row_neg = [&](IMat& x, int r) {
    for (int j = 0; j < x.cols; ++j) x.at(r, j) = -x.at(r, j);
  };

  int nm = std::min(m.rows, m.cols);
  int t = 0;
  for (; t < nm; ++t) {
    // Bring a smallest-magnitude nonzero entry of the trailing block to (t,t).
    int pi = -1, pj = -1;
    for (int i = t; i < a.rows; ++i)
      for (int j = t; j < a.cols; ++j)
        if (a.at(i, j) != 0 &&
            (pi < 0 || abs(a.at(i, j)) < abs(a.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    row_swap(a, t, pi);
    row_swap(u, t, pi);
    col_swap(a, t, pj);
    col_swap(v, t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // Clear column t.
      for (int i = t + 1; i < a.rows; ++i) {
        while (a.at(i, t) != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
          row_addmul(a, i, t, -q);
          row_addmul(u, i, t, -q);
          if (a.at(i, t) != 0) {
            row_swap(a, t, i);
            row_swap(u, t, i);
          }
        }
      }
      // Clear row t.
      for (int j = t + 1; j < a.cols; ++j) {
        while (a.at(t, j) != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
          col_addmul(a, j, t, -q);
          col_addmul(v, j, t, -q);
          if (a.at(t, j) != 0) {
            col_swap(a, t, j);
            col_swap(v, t, j);
            dirty = true;  // column t got refilled
          }
        }
      }
    }
    if (a.at(t, t) < 0) {
      row_neg(a, t);
      row_neg(u, t);
    }
    // Divisibility: pivot must divide every entry of the trailing block.
    bool redo = false;
    for (int i = t + 1; i < a.rows && !redo; ++i)
      for (int j = t + 1; j < a.cols && !redo; ++j)
        if (a.at(i, j) % a.at(t, t) != 0) {
          row_addmul(a, t, i, Int(1));
          row_addmul(u, t, i, Int(1));
          redo = true;
        }
    if (redo) --t;  // rerun elimination at the same position
  }
  d.assign(nm, Int(0));
  for (int i = 0; i < t; ++i) d[i] = a.at(i, i);
}

std::optional<std::vector<Int>> int_solve(const IMat& m, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != m.rows)
    throw Error(ErrorCode::Internal, "int_solve dimension mismatch");
  std::vector<Int> d;
  IMat u, v;
  smith_normal_form(m, d, u, v);
  std::vector<Int> ub = u.mul_vec(b);
  std::vector<Int> y(m.cols, Int(0));
  int nm = static_cast<int>(d.size());
  for (int i = 0; i < m.rows; ++i) {
    if (i < nm && d[i] != 0) {
      if (ub[i] % d[i] != 0) return std::nullopt;
      y[i] = ub[i] / d[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return v.mul_vec(y);
}

std::vector<Rat> lattice_coset_reduce(const IMat& basis, std::vector<Rat> x) {
  if (static_cast<int>(x.size()) != basis.rows && basis.cols > 0)
    throw Error(ErrorCode::Internal, "lattice_coset_reduce dimension mismatch");
  for (int j = 0; j < basis.cols; ++j) {
    int p = -1;
    for (int i = 0; i < basis.rows; ++i)
      if (basis.at(i, j) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    Int q = rat_floor(x[p] / Rat(basis.at(p, j)));
    if (q == 0) continue;
    for (int i = 0; i < basis.rows; ++i) x[i] -= Rat(q * basis.at(i, j));
  }
  return x;
}

IMat saturate(const IMat& m) {
  IMat orth = int_kernel(transpose(m));
  if (orth.cols == 0) return hnf_col(IMat::identity(m.rows));
  return int_kernel(transpose(orth));
}

}  // namespace wzht
