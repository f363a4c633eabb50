/*
 * Copyright 2026 The wittlink authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WITTLINK_CLASSIFY_HPP
#define WITTLINK_CLASSIFY_HPP

#include <wittlink/forms.hpp>
#include <wittlink/invariants.hpp>

namespace wittlink {

/* Complete Witt-group coordinates of a linking form.  Which fields are
   meaningful depends on the ring:

     Zt+  (c1, c2) with c1 in t Z_4[t] taken modulo the relations
          2 t^{2j} = 2 t^{oddpart(j)} (coefficients 0..3, canonical form
          keeps doubled coefficients only on odd exponents and on none of
          the exponents reachable from a smaller odd seed twice), and
          c2 in t Z_2[t].  The class is zero iff both are zero.
     Zt-  c in t^2 Z_2[t^2]; everything else is empty.
     Z    the pair (rk, gs) in Z_2 x Z_8.

   Fields that do not apply to the ring are kept zero. */
struct WittCoord {
  Ring ring = Ring::ZtPlus;
  IntPoly c1;
  IntPoly c2;
  IntPoly c;
  int rk = 0;
  int gs = 0;
};

bool witt_coord_is_zero(const WittCoord& w);
bool witt_coord_eq(const WittCoord& a, const WittCoord& b);

/* Canonical representative of a c1 value: coefficients are reduced mod 4,
   and the doubled part 2 t^j is rewritten to 2 t^{oddpart(j)} (exponent
   divided by two until odd, with oddpart(0) = 0) and summed mod 2.  The
   rewriting is confluent, so equality of canonical forms decides equality
   of classes. */
IntPoly witt_canonical_c1(const IntPoly& p);

/* One splitting step at level n >= 1: requires 2^n M = 0 and that both
   characteristic values at level n vanish, then factors out the closure of
   the span of the characteristic elements.  The result represents the same
   Witt class and has trivial characteristic values at level n, i.e. it is
   of even type at that level.  Forms already of even type pass through
   unchanged up to the quotient presentation.

   Throws: BadDomain (exponent too large, or n < 1), Unsupported (skew
   forms), NotInKernelOfQ (a characteristic value is nonzero),
   InternalError (postcondition failure). */
LinkingForm devissage_G(const LinkingForm& m, int n);

/* One exponent-halving step at level n >= 2: requires 2^n M = 0 and even
   type at level n (2^n q = 0), then factors out the closure of 2^{n-1} M.
   The result represents the same Witt class and satisfies 2^{n-1} M = 0.
   Left inverse of the forgetful map from exponent 2^{n-1} classes.

   Throws: BadDomain (n < 2 or exponent too large), Unsupported (skew
   forms), NotEvenType, InternalError (postcondition failure). */
LinkingForm devissage_F(const LinkingForm& m, int n);

/* Reduce a class of arbitrary two-power exponent to a representative with
   2M = 0 by alternating the two devissage steps.  For reduced classes
   (trivial evaluation at t = 0 over Z) the level-two obstruction always
   vanishes and the reduction succeeds; the reducedness itself is the
   caller's lookout and is not checked here.

   Throws: ObstructionNonzero (the level-two value Q^{(2)}_0 is nonzero, so
   the class does not come from exponent two; the printed value is stored
   in the error detail), Unsupported (skew forms), InternalError. */
LinkingForm reduce_to_exp2(const LinkingForm& m);

/* Complete Witt-class invariant.

     Z    rank mod 2 and the Gauss-sum argument, no reduction needed.
     Zt-  the level-one characteristic value of an exponent-two
          representative, a polynomial in t^2 Z_2[t^2]; requires a reduced
          class.
     Zt+  the pair (c1, c2): c2 is the second component of the B pair, and
          c1 combines the first component with the Arf invariant of the
          residual even-type part, canonically reduced.  Requires a reduced
          class.

   The input may have any two-power exponent; it is reduced to exponent
   two internally first.  Two reduced classes are equal iff their
   coordinates agree; over Z all classes are covered.

   Throws: NotReducedClass (polynomial rings, evaluation at t = 0 has
   nontrivial class over Z), Unsupported (skew forms), ModuleTooLarge /
   NoCandidateMatch (Gauss sum limits over Z), InternalError. */
WittCoord classify(const LinkingForm& m);

/* Witt-class equality test: forms the difference a + (-b) and decides
   triviality.  Unreduced polynomial-ring pairs are fine as long as the
   difference is reduced or already visibly nontrivial at t = 0.

   Throws: RingMismatch, Unsupported (mismatched signs or skew forms),
   ModuleTooLarge / NoCandidateMatch (Gauss sum limits over Z). */
bool witt_equal(const LinkingForm& a, const LinkingForm& b);

/* Additive order of the class with the given coordinates: 1, 2, 4, or 8
   (8 only over Z). */
int element_order(const WittCoord& w);

/* Verschiebung V_k on coordinates, k >= 1.  Over Zt+ every k acts: c1
   substitutes t -> t^k and renormalizes, c2 substitutes for odd k and dies
   for even k.  Over Zt- only odd k act.

   Throws: RingMismatch (coordinates over Z), BadDomain (k < 1),
   EvenVerschiebungOnMinusRing. */
WittCoord v_action(const WittCoord& w, int k);

}  // namespace wittlink

#endif  // WITTLINK_CLASSIFY_HPP
