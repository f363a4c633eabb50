/*
   Copyright 2026 The wittlink authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "wittlink/smith.hpp"

#include <algorithm>
#include <utility>

namespace wittlink {

PolyMat mat_identity(int n) {
  PolyMat m(n, PolyVec(n));
  for (int i = 0; i < n; ++i) m[i][i] = poly_from({1});
  return m;
}

PolyVec mat_apply(const PolyMat& a, const PolyVec& x) {
  PolyVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    IntPoly acc;
    for (size_t j = 0; j < a[i].size() && j < x.size(); ++j) {
      acc = poly_add(acc, poly_mul(a[i][j], x[j]));
    }
    r[i] = std::move(acc);
  }
  return r;
}

PolyMat mat_mul(const PolyMat& a, const PolyMat& b) {
  size_t rows = a.size();
  size_t inner = b.size();
  size_t cols = inner ? b[0].size() : 0;
  PolyMat r(rows, PolyVec(cols));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t k = 0; k < inner && k < a[i].size(); ++k) {
      if (poly_is_zero(a[i][k])) continue;
      for (size_t j = 0; j < cols; ++j) {
        r[i][j] = poly_add(r[i][j], poly_mul(a[i][k], b[k][j]));
      }
    }
  }
  return r;
}

PolyVec mat2_apply(const PolyMat& a, const PolyVec& x) {
  PolyVec r = mat_apply(a, x);
  for (IntPoly& p : r) p = poly2_reduce(p);
  return r;
}

PolyMat mat2_mul(const PolyMat& a, const PolyMat& b) {
  PolyMat r = mat_mul(a, b);
  for (PolyVec& row : r) {
    for (IntPoly& p : row) p = poly2_reduce(p);
  }
  return r;
}

namespace {

void row_op_sub(PolyMat& m, size_t dst, size_t src, const IntPoly& q) {
  for (size_t j = 0; j < m[dst].size(); ++j) {
    m[dst][j] = poly2_add(m[dst][j], poly2_mul(q, m[src][j]));
  }
}

void col_op_sub(PolyMat& m, size_t dst, size_t src, const IntPoly& q) {
  for (size_t i = 0; i < m.size(); ++i) {
    m[i][dst] = poly2_add(m[i][dst], poly2_mul(q, m[i][src]));
  }
}

void swap_rows(PolyMat& m, size_t a, size_t b) {
  if (a != b) std::swap(m[a], m[b]);
}

void swap_cols(PolyMat& m, size_t a, size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SnfResult smith_normal_form(PolyMat a) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  for (auto& row : a) {
    for (auto& e : row) e = poly2_reduce(e);
  }
  SnfResult res;
  res.u = mat_identity(static_cast<int>(rows));
  res.v = mat_identity(static_cast<int>(cols));

  size_t limit = std::min(rows, cols);
  for (size_t k = 0; k < limit; ++k) {
    for (;;) {
      /* Lowest-degree pivot in the active submatrix, ties broken by
         smallest column then smallest row. */
      int best_deg = -1;
      size_t pi = 0, pj = 0;
      for (size_t j = k; j < cols; ++j) {
        for (size_t i = k; i < rows; ++i) {
          int d = poly_degree(a[i][j]);
          if (d < 0) continue;
          if (best_deg < 0 || d < best_deg ||
              (d == best_deg && (j < pj || (j == pj && i < pi)))) {
            best_deg = d;
            pi = i;
            pj = j;
          }
        }
      }
      if (best_deg < 0) {
        k = limit;  // remaining submatrix is zero
        break;
      }
      swap_rows(a, k, pi);
      swap_rows(res.u, k, pi);
      swap_cols(a, k, pj);
      swap_cols(res.v, k, pj);

      bool clean = true;
      for (size_t i = k + 1; i < rows; ++i) {
        if (poly_is_zero(a[i][k])) continue;
        IntPoly q = poly2_divmod(a[i][k], a[k][k], nullptr);
        row_op_sub(a, i, k, q);
        row_op_sub(res.u, i, k, q);
        if (!poly_is_zero(a[i][k])) clean = false;
      }
      for (size_t j = k + 1; j < cols; ++j) {
        if (poly_is_zero(a[k][j])) continue;
        IntPoly q = poly2_divmod(a[k][j], a[k][k], nullptr);
        col_op_sub(a, j, k, q);
        col_op_sub(res.v, j, k, q);
        if (!poly_is_zero(a[k][j])) clean = false;
      }
      if (!clean) continue;

      /* Divisibility fix-up: fold a bad row into row k and redo. */
      bool fixed = true;
      for (size_t i = k + 1; i < rows && fixed; ++i) {
        for (size_t j = k + 1; j < cols && fixed; ++j) {
          IntPoly rem;
          poly2_divmod(a[i][j], a[k][k], &rem);
          if (!poly_is_zero(rem)) {
            for (size_t jj = 0; jj < cols; ++jj) {
              a[k][jj] = poly2_add(a[k][jj], a[i][jj]);
            }
            for (size_t jj = 0; jj < rows; ++jj) {
              res.u[k][jj] = poly2_add(res.u[k][jj], res.u[i][jj]);
            }
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }
    if (k >= limit) break;
  }

  res.d = std::move(a);
  return res;
}

bool mat2_is_unimodular(const PolyMat& a) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  if (rows != cols) return false;
  SnfResult s = smith_normal_form(a);
  for (size_t i = 0; i < rows; ++i) {
    if (poly_degree(s.d[i][i]) != 0) return false;
  }
  return true;
}

PolyMat mat2_inverse(const PolyMat& a) {
  size_t n = a.size();
  SnfResult s = smith_normal_form(a);
  for (size_t i = 0; i < n; ++i) {
    if (poly_degree(s.d[i][i]) != 0) {
      throw WittError(ErrorCode::InternalError, "matrix is not invertible");
    }
  }
  return mat2_mul(s.v, s.u);
}

SolveResult solve_linear_mod2(const PolyMat& a, const PolyVec& b, int ncols) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : static_cast<size_t>(std::max(ncols, 0));
  if (ncols >= 0 && rows && cols != static_cast<size_t>(ncols)) {
    throw WittError(ErrorCode::InternalError, "ncols does not match matrix");
  }
  SolveResult out;
  if (rows == 0) {
    out.consistent = true;
    out.particular.assign(cols, {});
    for (size_t j = 0; j < cols; ++j) {
      PolyVec gen(cols);
      gen[j] = poly_from({1});
      out.homogeneous.push_back(std::move(gen));
    }
    return out;
  }

  SnfResult s = smith_normal_form(a);
  PolyVec c(rows);
  for (size_t i = 0; i < rows; ++i) {
    IntPoly acc;
    for (size_t j = 0; j < rows && j < b.size(); ++j) {
      acc = poly2_add(acc, poly2_mul(s.u[i][j], b[j]));
    }
    c[i] = std::move(acc);
  }

  PolyVec y(cols);
  for (size_t i = 0; i < rows; ++i) {
    const IntPoly& d = (i < cols) ? s.d[i][i] : IntPoly{};
    if (poly_is_zero(d)) {
      if (!poly_is_zero(c[i])) return out;  // inconsistent
      continue;
    }
    IntPoly rem;
    IntPoly q = poly2_divmod(c[i], d, &rem);
    if (!poly_is_zero(rem)) return out;  // inconsistent
    y[i] = std::move(q);
  }

  out.consistent = true;
  out.particular = mat2_apply(s.v, y);
  for (size_t j = 0; j < cols; ++j) {
    bool free_col = (j >= rows) || poly_is_zero(s.d[j][j]);
    if (!free_col) continue;
    PolyVec gen(cols);
    for (size_t i = 0; i < cols; ++i) gen[i] = s.v[i][j];
    out.homogeneous.push_back(std::move(gen));
  }
  return out;
}

SolveResult solve_linear_pow2(const PolyMat& a, const PolyVec& b, int n,
                              int ncols) {
  if (n < 1) throw WittError(ErrorCode::InternalError, "modulus power < 1");
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : static_cast<size_t>(std::max(ncols, 0));
  Int window = pow2(n);

  PolyMat ared(rows);
  for (size_t i = 0; i < rows; ++i) {
    ared[i].resize(cols);
    for (size_t j = 0; j < cols; ++j) {
      ared[i][j] = poly_mod_coeffs(a[i][j], window);
    }
  }
  PolyVec bred(rows);
  for (size_t i = 0; i < rows; ++i) {
    bred[i] = poly_mod_coeffs(i < b.size() ? b[i] : IntPoly{}, window);
  }

  if (n == 1) {
    return solve_linear_mod2(ared, bred, static_cast<int>(cols));
  }

  SolveResult base = solve_linear_mod2(ared, bred, static_cast<int>(cols));
  SolveResult out;
  if (!base.consistent) return out;

  const PolyVec& x0 = base.particular;
  const auto& h = base.homogeneous;
  size_t s = h.size();

  /* Residual (b - A x0) / 2, exact by construction. */
  PolyVec ax0 = mat_apply(ared, x0);
  PolyVec r(rows);
  for (size_t i = 0; i < rows; ++i) {
    IntPoly diff = poly_sub(bred[i], ax0[i]);
    for (Int& cc : diff) {
      if (cc % 2 != 0) {
        throw WittError(ErrorCode::InternalError, "lift residual is odd");
      }
      cc /= 2;
    }
    r[i] = poly_trim(std::move(diff));
  }

  /* K columns: (A h_j) / 2. */
  PolyMat ext(rows, PolyVec(s + cols));
  for (size_t j = 0; j < s; ++j) {
    PolyVec ahj = mat_apply(ared, h[j]);
    for (size_t i = 0; i < rows; ++i) {
      for (Int& cc : ahj[i]) {
        if (cc % 2 != 0) {
          throw WittError(ErrorCode::InternalError, "kernel image is odd");
        }
        cc /= 2;
      }
      ext[i][j] = poly_trim(std::move(ahj[i]));
    }
  }
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) ext[i][s + j] = ared[i][j];
  }

  SolveResult rec = solve_linear_pow2(ext, r, n - 1, static_cast<int>(s + cols));
  if (!rec.consistent) return out;

  auto assemble = [&](const PolyVec& cw, bool with_x0) {
    PolyVec x(cols);
    for (size_t i = 0; i < cols; ++i) {
      IntPoly acc = with_x0 && i < x0.size() ? x0[i] : IntPoly{};
      for (size_t j = 0; j < s; ++j) {
        acc = poly_add(acc, poly_mul(h[j][i], cw[j]));
      }
      acc = poly_add(acc, poly_scale(cw[s + i], 2));
      x[i] = poly_mod_coeffs(acc, window);
    }
    return x;
  };

  out.consistent = true;
  out.particular = assemble(rec.particular, true);
  for (const PolyVec& gen : rec.homogeneous) {
    out.homogeneous.push_back(assemble(gen, false));
  }
  Int half = pow2(n - 1);
  for (const PolyVec& hj : h) {
    PolyVec gen(cols);
    for (size_t i = 0; i < cols; ++i) {
      gen[i] = poly_mod_coeffs(poly_scale(hj[i], half), window);
    }
    out.homogeneous.push_back(std::move(gen));
  }
  return out;
}

SolveResult solve_mod4(const PolyMat& a, const PolyVec& b, int ncols) {
  return solve_linear_pow2(a, b, 2, ncols);
}

}  // namespace wittlink
