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

#ifndef WITTLINK_TORSION_HPP
#define WITTLINK_TORSION_HPP

#include <optional>
#include <vector>

#include "wittlink/smith.hpp"

namespace wittlink {

/* Building block of a length-one torsion module.  Cyclic(a) is R/2^a.
   Mp(p) is the exponent-four module M(p) = <phi, tau | 2 phi = p tau,
   2 tau = 0>, equivalently the submodule <p, 2> of Z4[t]; its parameter
   is stored mod 2 and must be nonzero there. */
struct Piece {
  enum class Kind { Cyclic, Mp };
  Kind kind = Kind::Cyclic;
  int a = 1;    // Cyclic only
  IntPoly p;    // Mp only

  static Piece cyclic(int a);
  static Piece mp(IntPoly p);
};

struct TorsionModule {
  Ring ring = Ring::ZtPlus;
  std::vector<Piece> pieces;
  int exponent = 0;  // smallest n with 2^n M = 0
};

/* Validates the piece list: Mp parameters nonzero mod 2 (NotLengthOne),
   no Mp pieces and no t-dependence over ring Z (BadRing). */
TorsionModule make_module(std::vector<Piece> pieces, Ring ring);

bool module_eq(const TorsionModule& a, const TorsionModule& b);

/* One coordinate per piece: Cyclic(a) coordinates live mod 2^a, Mp(p)
   coordinates are representatives of the submodule <p, 2> of Z4[t]. */
struct ModElement {
  std::vector<IntPoly> coords;
};

/* Distinguished generators: one per Cyclic piece; phi then tau per Mp
   piece. */
int module_num_gens(const TorsionModule& m);
std::vector<ModElement> module_generators(const TorsionModule& m);

/* Relation rows of the module over its distinguished generators. */
PolyMat presentation_rows(const TorsionModule& m);

ModElement elem_make(const TorsionModule& m, std::vector<IntPoly> coords);
ModElement elem_zero(const TorsionModule& m);
bool elem_eq(const TorsionModule& m, const ModElement& x, const ModElement& y);
bool elem_is_zero(const TorsionModule& m, const ModElement& x);
ModElement elem_add(const TorsionModule& m, const ModElement& x,
                    const ModElement& y);
ModElement elem_sub(const TorsionModule& m, const ModElement& x,
                    const ModElement& y);
ModElement elem_neg(const TorsionModule& m, const ModElement& x);
ModElement elem_scale(const TorsionModule& m, const IntPoly& r,
                      const ModElement& x);

/* Canonical decomposition of x over the distinguished generators, and its
   inverse. */
PolyVec elem_gen_coeffs(const TorsionModule& m, const ModElement& x);
ModElement elem_from_gen_coeffs(const TorsionModule& m, const PolyVec& coeffs);

struct Submodule {
  std::vector<ModElement> generators;
};

Submodule submodule_make(const TorsionModule& m,
                         std::vector<ModElement> generators);
Submodule submodule_sum(const TorsionModule& m, const Submodule& a,
                        const Submodule& b);

/* Membership with certificate: coefficients over s.generators when x lies
   in the span. */
std::optional<PolyVec> membership(const TorsionModule& m, const Submodule& s,
                                  const ModElement& x);

bool submodule_contains(const TorsionModule& m, const Submodule& s,
                        const ModElement& x);
bool submodule_eq(const TorsionModule& m, const Submodule& a,
                  const Submodule& b);

/* Smallest colength-one submodule containing s: all y with p y in s for
   some p outside 2R. */
Submodule closure(const TorsionModule& m, const Submodule& s);

/* Generator list with redundant members greedily removed. */
std::vector<ModElement> reduced_generators(const TorsionModule& m,
                                           const Submodule& s);

/* A module given by generators and relations, normalized to a piece-list
   module.  Valid for exponent at most four.  gen_vecs maps each
   distinguished generator of the normalized module to a coefficient vector
   over the presentation generators. */
struct PresentedModule {
  TorsionModule module;
  int num_gens = 0;
  PolyMat relations;
  std::vector<PolyVec> gen_vecs;
};

/* Normalizes the presentation Z4[t]^num_gens / rowspan(relations).  Throws
   NotLengthOne when the presented module fails the length-one criterion
   (the two-torsion submodule and its quotient must both be free). */
PresentedModule present_module(int num_gens, PolyMat relations, Ring ring);

/* Coefficient vector over the presentation generators -> element of the
   normalized module, and back. */
ModElement presented_to_module(const PresentedModule& pm, const PolyVec& coeffs);
PolyVec presented_from_module(const PresentedModule& pm, const ModElement& x);

/* Normal form of an exponent <= 4 module: Mp pieces with a divisibility
   chain of parameters, then free exponent-two pieces.  The embedded
   PresentedModule maps between the original generator coordinates and the
   normal form.  Throws ExponentTooHigh above exponent four. */
PresentedModule structure_decompose(const TorsionModule& m);

/* Presentation of t/s for submodules s inside t, with maps both ways.
   Throws NotASubmodule when s is not contained in t, and
   QuotientNotLengthOne when the quotient fails the length-one criterion
   (s not closed relative to t). */
struct QuotientData {
  TorsionModule ambient;
  std::vector<ModElement> t_generators;
  PresentedModule pres;
};

QuotientData quotient_presentation(const TorsionModule& m, const Submodule& s,
                                   const Submodule& t);

/* Image of x (which must lie in t) in the quotient module. */
ModElement quotient_project(const QuotientData& qd, const ModElement& x);

/* A lift to the ambient module of an element of the quotient. */
ModElement quotient_section(const QuotientData& qd, const ModElement& y);

}  // namespace wittlink

#endif  // WITTLINK_TORSION_HPP
