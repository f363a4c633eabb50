/* Copyright 2026 The wittlink authors
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

/* Quadratic linking forms (M, b, q) on length-one torsion modules.
 *
 * A form stores the Gram matrix b(g_i, g_j) as dyadic values mod R and the
 * quadratic values q(g_i) mod (1+*)R on the module generators only; values
 * everywhere else follow from sesquilinearity and the crossterm identity
 * q(x+y) - q(x) - q(y) = {1+*} b(x,y).  Construction validates symmetry,
 * descent to the presented module, the compatibility [q(x)] = b(x,x), and
 * nonsingularity of the adjoint.
 */

#ifndef WITTLINK_FORMS_HPP
#define WITTLINK_FORMS_HPP

#include <optional>
#include <vector>

#include "wittlink/errors.hpp"
#include "wittlink/ring.hpp"
#include "wittlink/torsion.hpp"

namespace wittlink {

using DyadicVec = std::vector<DyadicPoly>;
using DyadicMat = std::vector<DyadicVec>;

struct LinkingForm {
  TorsionModule module;
  int epsilon = 1;  // +1 symmetric, -1 skew
  DyadicMat gram;   // b(g_i, g_j), Modulus::ModR
  DyadicVec qvec;   // q(g_i), Modulus::ModOnePlusStar
};

/* Validate and construct a linking form.  Throws SymmetryViolated,
   QuadraticIncompatible, Singular, RingMismatch, or Unsupported (skew
   forms away from Z[t] with the trivial involution). */
LinkingForm make_form(TorsionModule module, int epsilon, DyadicMat gram,
                      DyadicVec qvec);

LinkingForm zero_form(Ring ring, int epsilon = 1);

/* Named forms.  P_{p,g} is the rank-two form with Gram antidiag(1/2) and
   quadratic vector (p, g); N_{p,g} has Gram [[p/2, 1/2], [1/2, 0]] and
   quadratic vector (p/2, g); rank1Z4 is (Z_4[t], x ybar / 4, x xbar / 4);
   hyperbolic is P_{0,0}. */
struct FormTemplate {
  enum class Kind { P, N, Rank1Z4, Hyperbolic };
  Kind kind = Kind::P;
  IntPoly p;
  IntPoly g;
  Ring ring = Ring::ZtPlus;
};

LinkingForm build_template(const FormTemplate& tpl);

LinkingForm form_P(IntPoly p, IntPoly g, Ring ring);
LinkingForm form_N(IntPoly p, IntPoly g, Ring ring);
LinkingForm form_rank1z4(Ring ring);
LinkingForm form_hyperbolic(Ring ring);

/* Orthogonal direct sum and negation. */
LinkingForm form_sum(const LinkingForm& a, const LinkingForm& b);
LinkingForm form_neg(const LinkingForm& a);

bool form_eq(const LinkingForm& a, const LinkingForm& b);

/* Evaluation via the coordinate expansion of the axioms. */
DyadicPoly eval_b(const LinkingForm& m, const ModElement& x,
                  const ModElement& y);
DyadicPoly eval_q(const LinkingForm& m, const ModElement& x);

/* Orthogonal complement {x : b(x, S) = 0}; always closed. */
Submodule perp(const LinkingForm& m, const Submodule& s);

/* L is a Lagrangian when q|_L = 0 and L = L^perp; a subLagrangian when
   q|_L = 0, b|_{LxL} = 0, and L is closed. */
bool is_lagrangian(const LinkingForm& m, const Submodule& l);
bool is_sublagrangian(const LinkingForm& m, const Submodule& s);

/* Reduction by a subLagrangian: the induced form on S^perp / S, together
   with the quotient presentation used to build it.  The constructor checks
   the Witt certificate: the reduced form plus the negation of the input
   admits the graph Lagrangian {([x], x) : x in S^perp}. */
struct SubLagrangianReduction {
  LinkingForm form;       // the form on S^perp / S
  QuotientData quotient;  // presentation of S^perp / S over the ambient
  Submodule sub;          // S
  Submodule sperp;        // S^perp
};

SubLagrangianReduction sublagrangian_reduce(const LinkingForm& m,
                                            const Submodule& s);

/* Functoriality: t -> t^k on Gram entries, quadratic values, and module
   parameters. */
LinkingForm apply_verschiebung(const LinkingForm& m, int k);

/* Evaluation t -> c for c in {0, 1}; the result is a form over Z. */
LinkingForm evaluate_at(const LinkingForm& m, int c);

/* Re-express the form on a new generating set.  Column k of p holds the
   coordinates of the new generator over the old ones; the new generators
   must generate the module and satisfy the same presentation. */
LinkingForm form_change_basis(const LinkingForm& m, const PolyMat& p);

/* Exhaustive Lagrangian search.  Over Z the whole finite module is
   enumerated; over the polynomial rings only exponent-two modules are
   searched, with coordinate degrees at most `bound`.  The cap limits the
   number of candidates visited. */
std::optional<Submodule> brute_lagrangian(const LinkingForm& m, int bound,
                                          long long cap = 1 << 20);

/* Skew nullification: the chain of subLagrangian reductions taking a skew
   form over Z[t] to the zero form.  Each step records the form it started
   from and the subLagrangian used. */
struct SkewStep {
  LinkingForm before;
  Submodule sub;
};

std::vector<SkewStep> skew_nullify(const LinkingForm& m);

}  // namespace wittlink

#endif  // WITTLINK_FORMS_HPP
