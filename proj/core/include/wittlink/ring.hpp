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

#ifndef WITTLINK_RING_HPP
#define WITTLINK_RING_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "wittlink/errors.hpp"

namespace wittlink {

using Int = boost::multiprecision::cpp_int;

/* Polynomial in t with integer coefficients; index i holds the coefficient
   of t^i.  Canonical form has no trailing zero entries, so the zero
   polynomial is the empty vector. */
using IntPoly = std::vector<Int>;

/* Base ring of a computation.  ZtPlus is Z[t] with the identity involution,
   ZtMinus is Z[t] with t -> -t, and Z is the integers (involution trivial). */
enum class Ring { ZtPlus, ZtMinus, Z };

/* Subrings of Z_2[t] that arise as canonical-form domains of arf_reduce. */
enum class Subring { Z2t, Z2t2, t2Z2t2 };

Int pow2(int k);

const char* ring_name(Ring ring);

/* --- Plain polynomial arithmetic ------------------------------------- */

IntPoly poly_trim(IntPoly p);
bool poly_is_zero(const IntPoly& p);
int poly_degree(const IntPoly& p);  // -1 for the zero polynomial
const Int& poly_coeff(const IntPoly& p, int i);
IntPoly poly_const(const Int& c);
IntPoly poly_t_power(int k);  // t^k
IntPoly poly_from(std::initializer_list<long long> coeffs);

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_neg(const IntPoly& a);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_scale(const IntPoly& a, const Int& c);

/* Substitute t -> t^k.  k >= 1. */
IntPoly poly_subst_pow(const IntPoly& p, int k);

/* Reduce every coefficient to its representative in [0, m). */
IntPoly poly_mod_coeffs(const IntPoly& p, const Int& m);

Int poly_eval(const IntPoly& p, const Int& at);

/* Apply the involution of the ring to a polynomial: identity for ZtPlus
   and Z, negation of odd-degree coefficients for ZtMinus. */
IntPoly poly_involve(const IntPoly& p, Ring ring);

bool poly_eq(const IntPoly& a, const IntPoly& b);

std::string poly_to_string(const IntPoly& p);

/* --- Mod-2 polynomial layer ------------------------------------------ */

/* Coefficients reduced to {0,1}; same container as IntPoly. */
IntPoly poly2_reduce(const IntPoly& p);
IntPoly poly2_add(const IntPoly& a, const IntPoly& b);
IntPoly poly2_mul(const IntPoly& a, const IntPoly& b);

/* Euclidean division in Z_2[t]: returns the quotient, stores the remainder
   if rem is non-null.  b must be nonzero mod 2. */
IntPoly poly2_divmod(const IntPoly& a, const IntPoly& b, IntPoly* rem);

IntPoly poly2_gcd(IntPoly a, IntPoly b);

/* gcd of the list together with Bezout coefficients:
   sum_i coeff[i] * xs[i] = gcd  (mod 2). */
std::pair<IntPoly, std::vector<IntPoly>> poly2_bezout(
    const std::vector<IntPoly>& xs);

/* Split p mod 2 as p = ev(t^2) + t * od(t^2); returns {ev, od}. */
std::pair<IntPoly, IntPoly> evodd_decompose(const IntPoly& p);

/* Frobenius square mod 2: (sum a_i t^i)^2 = sum a_i t^{2i}. */
IntPoly poly2_frobenius(const IntPoly& p);

/* Canonical representative of p modulo the subgroup {x^2 - x} of the given
   subring of Z_2[t].  For Z2t the canonical form is supported on odd
   exponents plus the constant term; for Z2t2 and t2Z2t2 on exponents
   congruent to 2 mod 4 (plus the constant term for Z2t2).  Throws
   NotInSubring if p lies outside the subring. */
IntPoly arf_reduce(IntPoly p, Subring subring);

/* --- Dyadic fractions over the base ring ----------------------------- */

/* Quotient in which a dyadic value lives.  None is an exact fraction
   num / 2^denom_exp.  ModR and Mod2R are the quotients (1/2^k)R / R and
   (1/2^k)R / 2R.  ModOnePlusStar is (1/2^k)R / (1+*)R, the home of
   quadratic-form values; over ZtMinus the submodule (1+*)R doubles even
   exponents only, so odd-exponent coefficients stay exact there. */
enum class Modulus { None, ModR, Mod2R, ModOnePlusStar };

struct DyadicPoly {
  IntPoly num;
  int denom_exp = 0;
  Modulus mod = Modulus::None;
  Ring ring = Ring::ZtPlus;
};

/* Construct a canonical dyadic value num / 2^denom_exp in the given
   quotient.  Over ring Z the numerator must be constant. */
DyadicPoly make_dyadic(IntPoly num, int denom_exp, Modulus mod, Ring ring);

DyadicPoly dyadic_canonical(DyadicPoly x);
bool dyadic_eq(const DyadicPoly& a, const DyadicPoly& b);
bool dyadic_is_zero(const DyadicPoly& x);
DyadicPoly dyadic_zero(Modulus mod, Ring ring);

DyadicPoly dyadic_add(const DyadicPoly& a, const DyadicPoly& b);
DyadicPoly dyadic_sub(const DyadicPoly& a, const DyadicPoly& b);
DyadicPoly dyadic_neg(const DyadicPoly& a);

/* r * x for a ring element r.  Not defined on ModOnePlusStar, where plain
   scaling does not descend; use dyadic_scale_conj there. */
DyadicPoly dyadic_scale_plain(const DyadicPoly& x, const IntPoly& r);

/* r * x * involve(r), the scaling that quadratic values support. */
DyadicPoly dyadic_scale_conj(const DyadicPoly& x, const IntPoly& r);

/* Involution on a dyadic value; requires a modulus preserved by it
   (all of them are). */
DyadicPoly involve(const DyadicPoly& x);

/* Coefficient substitution t -> t^k on a dyadic value.  k must be odd on
   ZtMinus (even k does not respect the involution there); violations throw
   EvenVerschiebungOnMinusRing. */
DyadicPoly verschiebung(const DyadicPoly& x, int k);

/* Push a symmetric-form value b(x,x) in (1/2^k)R / R to the quadratic
   quotient as the class of x + involve(x). */
DyadicPoly one_plus_star(const DyadicPoly& x);

std::string dyadic_to_string(const DyadicPoly& x);

/* --- Tate classes ----------------------------------------------------- */

/* An element of {x = involve(x)} / {y + involve(y)} with the Frobenius-
   twisted module action a . x = a^2 x.  Concretely: Z_2[t] for ZtPlus,
   Z_2[t^2] for ZtMinus, Z_2 for Z.  rep has {0,1} coefficients. */
struct TateClass {
  IntPoly rep;
  Ring ring = Ring::ZtPlus;
};

/* Validates that rep lies in the fixed subring (even-exponent support for
   ZtMinus, constant for Z); throws NotSelfConjugate otherwise. */
TateClass make_tate(IntPoly rep, Ring ring);

bool tate_eq(const TateClass& a, const TateClass& b);
bool tate_is_zero(const TateClass& x);
TateClass tate_add(const TateClass& a, const TateClass& b);

/* Module action a . x = a^2 x mod 2. */
TateClass tate_act(const IntPoly& a, const TateClass& x);

/* {1+*}: the class of u + involve(u) scaled by 1/2, for x = u / 2 with
   denom_exp <= 1.  Throws DenominatorTooLarge above that. */
TateClass tate_one_plus_star(const DyadicPoly& x);

/* {2}: doubling (1/2)R / R -> R / 2R, u/2 -> u mod 2.  denom_exp <= 1. */
IntPoly tate_two(const DyadicPoly& x);

/* Right inverse of {1+*}: c -> c/2.  A two-sided inverse on ZtPlus and Z;
   on ZtMinus {1+*} is surjective but not injective and this picks the
   canonical preimage. */
DyadicPoly tate_one_plus_star_section(const TateClass& c);

/* Inverse of {2}: y mod 2 -> y/2 in (1/2)R / R. */
DyadicPoly tate_two_inv(const IntPoly& y, Ring ring);

}  // namespace wittlink

#endif  // WITTLINK_RING_HPP
