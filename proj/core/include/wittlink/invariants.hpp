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

/* Witt-class invariants of linking forms.
 *
 * Over Z the complete pair is the rank parity together with the exact
 * Gauss sum, an eighth root of unity computed in a cyclotomic integer
 * ring so that no floating point enters.  Over the polynomial rings the
 * invariants are built from the characteristic elements v_0, v_1: the
 * unique two-torsion elements whose pairings reproduce the diagonal of
 * the form at the top exponent.  Evaluating q on them gives the Q
 * invariants, and over Z[t] the pair B = (B_1, B_2) derived from them
 * classifies the reduced exponent-two group together with the even-type
 * part.  The even-type part itself is handled through the correspondence
 * with quadratic forms over Z_2[t] (alpha_push / alpha_pull) and their
 * Arf invariant.
 */

#ifndef WITTLINK_INVARIANTS_HPP
#define WITTLINK_INVARIANTS_HPP

#include <utility>
#include <vector>

#include "wittlink/forms.hpp"

namespace wittlink {

/* --- Exact cyclotomic arithmetic -------------------------------------- */

/* Element of Z[x] / (x^{2^level} + 1), where x stands for the primitive
   root e^{pi i / 2^level}.  coeffs always has exactly 2^level entries. */
struct CyclotomicInt {
  int level = 3;
  std::vector<Int> coeffs;
};

CyclotomicInt cyc_zero(int level);
CyclotomicInt cyc_one(int level);

/* x^e for e >= 0, reduced with x^{2^level} = -1. */
CyclotomicInt cyc_root_power(int level, const Int& e);

CyclotomicInt cyc_add(const CyclotomicInt& a, const CyclotomicInt& b);
CyclotomicInt cyc_mul(const CyclotomicInt& a, const CyclotomicInt& b);
CyclotomicInt cyc_scale(const CyclotomicInt& a, const Int& c);
bool cyc_eq(const CyclotomicInt& a, const CyclotomicInt& b);

/* --- Invariants over Z ------------------------------------------------- */

/* Parity of log2 |M|.  Requires ring Z (RingMismatch otherwise). */
int rank_inv(const LinkingForm& m);

/* The class k in Z_8 with sum_{x in M} e^{pi i q(x)} = sqrt|M| e^{2 pi i k/8},
   computed exactly: the sum is accumulated in a cyclotomic ring whose level
   accommodates every q denominator, then matched against the eight exact
   candidates.  Requires ring Z.  Throws ModuleTooLarge when log2 |M|
   exceeds max_log2, and NoCandidateMatch when no candidate fits (which
   signals a singular or otherwise invalid input). */
int gauss_sum(const LinkingForm& m, int max_log2 = 22);

/* --- Quadratic forms over R/2R ----------------------------------------- */

/* A quadratic form on a free module over R/2R = Z_2[t] (or Z_2 for ring Z):
   lambda is the value matrix on the standard basis, alternating with
   lambda(x,y) = lambda(y,x) and zero diagonal; mu holds the quadratic
   values of the basis vectors.  On combinations mu extends by
   mu(x + y) = mu(x) + mu(y) + lambda(x, y) and mu(a x) = a^2 mu(x). */
struct QuadraticFormZ2 {
  Ring ring = Ring::ZtPlus;
  PolyMat lambda;
  PolyVec mu;
};

/* Validates shape, reduces entries mod 2, and checks the alternating
   conditions (SymmetryViolated) and the constant-entry requirement over
   ring Z (RingMismatch).  Singularity is not checked here; consumers that
   need unimodularity check it themselves. */
QuadraticFormZ2 make_quadratic_z2(Ring ring, PolyMat lambda, PolyVec mu);

bool quadratic_z2_eq(const QuadraticFormZ2& a, const QuadraticFormZ2& b);

/* lambda and mu on coordinate vectors over the standard basis. */
IntPoly quadratic_z2_lambda(const QuadraticFormZ2& f, const PolyVec& x,
                            const PolyVec& y);
IntPoly quadratic_z2_mu(const QuadraticFormZ2& f, const PolyVec& x);

/* Base change along a unimodular matrix whose columns express the new
   basis in the old coordinates.  Throws BadDomain when u is not square or
   not invertible mod 2. */
QuadraticFormZ2 quadratic_z2_change_basis(const QuadraticFormZ2& f,
                                          const PolyMat& u);

/* --- The correspondence with exponent-two linking forms ---------------- */

/* Halve: the linking form on (R/2R)^rank with b = lambda / 2 and
   q(e_i) = (mu_i + involve(mu_i)) / 2.  The result is always of even type.
   Construction reuses the full linking-form validation, so a singular
   lambda surfaces as Singular. */
LinkingForm alpha_push(const QuadraticFormZ2& f);

/* Inverse direction: requires an exponent-two form of even type
   (2 q(x) = 0 for all x); throws NotEvenType otherwise and BadDomain when
   the exponent exceeds two.  Doubles the Gram matrix into lambda and reads
   mu off the integral representatives of q. */
QuadraticFormZ2 alpha_pull(const LinkingForm& m);

/* --- Arf invariant ----------------------------------------------------- */

/* Arf invariant of an alternating unimodular quadratic form over Z_2[t]:
   extracts hyperbolic pairs (e, f) greedily, always pivoting on the
   lowest-index basis vector of the remaining summand, accumulates
   sum mu(e_i) mu(f_i), and returns the canonical representative modulo
   the subgroup {x^2 + x}, supported on the constant term and odd
   exponents.  Throws NotSymplectic when lambda is not unimodular. */
IntPoly arf_invariant(const QuadraticFormZ2& f);

/* --- Template builders ------------------------------------------------- */

/* The exponent-two form P_{p,1} for p in the twisted first cohomology of
   the ring: any p mod 2 over Zt+, even-support p over Zt-, constant p over
   Z.  Throws BadDomain when p lies outside that domain. */
LinkingForm P2_map(const IntPoly& p, Ring ring);

/* The exponent-two form P_{a/t, t} over Zt- for a in t^2 Z_2[t^2]; its
   evaluation at t = 0 is hyperbolic.  Throws BadDomain when a is not an
   even-support multiple of t^2. */
LinkingForm Q0_map(const IntPoly& a);

/* --- Characteristic elements ------------------------------------------- */

/* The two-torsion elements v_0, v_1 determined by the diagonal of the form
   at level n: writing phi(x) for the class of 2^{n-1}(b(x,x) + conj) and
   splitting it over the basis {[1],[t]} of the twisted cohomology of R/2R,
   v_i is the unique solution of {2} b(v_i, x) = phi_i(x).  v_1 = 0 over
   Zt- and Z. */
struct CharElements {
  ModElement v0;
  ModElement v1;
  int level = 1;
};

/* Requires 2^n M = 0 (BadDomain otherwise) and a symmetric form
   (Unsupported for skew).  The defining equations are re-verified on every
   generator before returning. */
CharElements char_elements(const LinkingForm& m, int n);

/* --- Q and B ----------------------------------------------------------- */

/* q evaluated at the characteristic element v_i at level n, as a dyadic
   class.  i must be 0 or 1. */
DyadicPoly Q_inv_raw(const LinkingForm& m, int n, int i);

/* The same value coerced into the twisted cohomology of R/2R.  For n >= 2
   the value is integral automatically; for n = 1 a non-integral value
   means the class is not reduced and NotReducedClass is thrown. */
TateClass Q_inv(const LinkingForm& m, int n, int i);

/* The pair of invariants classifying the reduced exponent-two group over
   Z[t] modulo the even-type subgroup:
       B_1 = q(v_0) + t q(v_1),
       B_2 = (t s_1)^2 + t s_0^2  where  q(v_i) = r_i(t^2) + t s_i(t^2)
   read mod 2.  Both land in t Z_2[t]. */
struct BValue {
  IntPoly b1;
  IntPoly b2;
};

/* Requires ring Zt+, exponent two, and an input whose evaluation at t = 0
   has trivial class over Z (checked through rank_inv and gauss_sum);
   throws NotReducedClass otherwise. */
BValue B_inv(const LinkingForm& m);

}  // namespace wittlink

#endif  // WITTLINK_INVARIANTS_HPP
