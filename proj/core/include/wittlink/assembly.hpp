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

#ifndef WITTLINK_ASSEMBLY_HPP
#define WITTLINK_ASSEMBLY_HPP

#include <string>
#include <vector>

namespace wittlink {

/* Structured direct-sum descriptions of L-theoretic groups.  An atom is a
   single summand:

     Z, Z2        the groups Z and Z/2,
     VQuot        a quotient V/<ideal> of the Verschiebung algebra
                  V = Z[V2, V3, V5, ...],
     VOdQuot      a quotient Vod/<ideal> of its odd part
                  Vod = Z[V3, V5, V7, ...],
     Symbolic     a named group whose value is not computed here.

   An atom with `countable` set stands for a countably infinite direct sum
   of copies of itself.  A descriptor is a finite list of atoms; the empty
   list is the trivial group.  Zero summands are never stored. */
enum class AtomKind { Z, Z2, VQuot, VOdQuot, Symbolic };

struct GroupAtom {
  AtomKind kind = AtomKind::Z;
  std::vector<std::string> ideal;  // VQuot / VOdQuot generators
  std::string name;                // Symbolic
  bool countable = false;
};

struct GroupDescriptor {
  std::vector<GroupAtom> summands;
  /* Set when part of the formula is quoted rather than derived. */
  std::string note;
};

bool atom_eq(const GroupAtom& a, const GroupAtom& b);
bool descriptor_eq(const GroupDescriptor& a, const GroupDescriptor& b);
bool descriptor_is_trivial(const GroupDescriptor& d);

/* Plain-text rendering: "V/<4,2V2-2> + sum_{i} V/<2,V2>", "0" when
   trivial. */
std::string atom_to_string(const GroupAtom& a);
std::string descriptor_to_string(const GroupDescriptor& d);

/* The unitary nilpotent group UNil_n(Z; Z^e1, Z^e2), n taken mod 4, each
   sign +1 or -1.  Sign pairs outside the two tabulated ones are resolved
   first: swapping the two antistructures preserves the group, and
   flipping both signs shifts n by two.

   Throws: BadDomain (a sign is not +1 or -1). */
GroupDescriptor unil_value(int n, int eps1, int eps2);

/* L_n(Z[Dinf], w) for the infinite dihedral group, decomposed as
   Ltilde_n(Z[Z2], w1) + L_n(Z[Z2], w2) + UNil_n(Z; Z^e1, Z^e2) with the
   Z[Z2] summands left symbolic, except for n = 1 with both signs
   negative, where the group collapses to UNil_1(Z; Z^-, Z^-) + L_0(Z).
   Signs are the values of w on the two reflection generators and must
   satisfy eps2 >= eps1.

   Throws: BadSignOrder, BadDomain (a sign is not +1 or -1). */
GroupDescriptor l_group_dihedral(int n, int eps1, int eps2);

/* L_n of the Laurent ring Z[t,1/t] with the involution t -> sign * t:
   the plus case splits as L_n(Z)^2 + NL_n(Z)^2 and the minus case as
   L_n(Z) + L_{n+2}(Z) + N-L_n(Z)^2, with the NL values filled in from
   the unitary nilpotent computation.  The minus-case splitting is quoted
   as stated rather than derived, and the descriptor notes that.

   Throws: BadDomain (sign is not +1 or -1). */
GroupDescriptor l_laurent(int n, int sign);

}  // namespace wittlink

#endif  // WITTLINK_ASSEMBLY_HPP
