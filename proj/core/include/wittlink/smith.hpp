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

#ifndef WITTLINK_SMITH_HPP
#define WITTLINK_SMITH_HPP

#include <vector>

#include "wittlink/ring.hpp"

namespace wittlink {

using PolyVec = std::vector<IntPoly>;
using PolyMat = std::vector<PolyVec>;

PolyMat mat_identity(int n);
PolyVec mat_apply(const PolyMat& a, const PolyVec& x);      // exact
PolyMat mat_mul(const PolyMat& a, const PolyMat& b);        // exact
PolyVec mat2_apply(const PolyMat& a, const PolyVec& x);     // mod 2
PolyMat mat2_mul(const PolyMat& a, const PolyMat& b);       // mod 2

/* U * A * V = D with U, V invertible over Z_2[t], D diagonal with the
   divisibility chain d_0 | d_1 | ... Deterministic: the pivot is always the
   lowest-degree entry of the active submatrix, ties broken by smallest
   column then smallest row. */
struct SnfResult {
  PolyMat u;
  PolyMat d;
  PolyMat v;
};

SnfResult smith_normal_form(PolyMat a);

bool mat2_is_unimodular(const PolyMat& a);
PolyMat mat2_inverse(const PolyMat& a);  // requires unimodular

/* Solution of A x = b.  homogeneous spans the kernel (as a module). */
struct SolveResult {
  bool consistent = false;
  PolyVec particular;
  std::vector<PolyVec> homogeneous;
};

/* Solve over Z_2[t].  ncols disambiguates the unknown count when A has no
   rows; otherwise it must match the row width. */
SolveResult solve_linear_mod2(const PolyMat& a, const PolyVec& b,
                              int ncols = -1);

/* Solve A x = b over Z[t] / 2^n, lifting a mod-2 solution one power of two
   at a time.  The homogeneous generators span the full solution kernel
   mod 2^n. */
SolveResult solve_linear_pow2(const PolyMat& a, const PolyVec& b, int n,
                              int ncols = -1);

SolveResult solve_mod4(const PolyMat& a, const PolyVec& b, int ncols = -1);

}  // namespace wittlink

#endif  // WITTLINK_SMITH_HPP
