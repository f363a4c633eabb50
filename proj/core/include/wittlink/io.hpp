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

#ifndef WITTLINK_IO_HPP
#define WITTLINK_IO_HPP

#include <string>

#include <json.hpp>

#include "wittlink/assembly.hpp"
#include "wittlink/classify.hpp"
#include "wittlink/forms.hpp"
#include "wittlink/ring.hpp"
#include "wittlink/torsion.hpp"

namespace wittlink {

/* Text format for ring elements, used in every file and report:

     poly  := term (('+' | '-') term)*     optional leading '-'
     term  := INT | INT? 't' ('^' INT)?
     value := poly ('/' '2^' INT)?

   Coefficients are decimal; whitespace is ignored everywhere.  Parsers
   throw ParseError on any violation. */

IntPoly parse_poly(const std::string& text);

struct ParsedValue {
  IntPoly num;
  int denom_exp = 0;
};

ParsedValue parse_value(const std::string& text);

/* Whitespace-free renderings, inverse to the parsers.  The zero
   polynomial prints as "0"; a zero denominator exponent is dropped. */
std::string poly_to_compact(const IntPoly& p);
std::string value_to_compact(const IntPoly& num, int denom_exp);

/* Canonicalizes first, so equal dyadic classes print identically. */
std::string dyadic_value_string(const DyadicPoly& x);

/* ring_name's inverse: accepts "Zt+", "Zt-", "Z".  Throws ParseError. */
Ring ring_from_string(const std::string& text);

/* --- JSON formats ------------------------------------------------------ */

/* Module fragment: {"ring":"Zt+","pieces":[{"kind":"cyclic","a":1},
   {"kind":"Mp","p":"1+t"}]}.  Forms extend it with "epsilon", the Gram
   matrix "b" (row-major value strings) and the quadratic vector "q".
   Serialized with sorted keys and no whitespace, so files are diffable.
   from_json functions throw ParseError on shape violations and let the
   library's own validation errors pass through. */

nlohmann::json module_to_json(const TorsionModule& m);
TorsionModule module_from_json(const nlohmann::json& j);

nlohmann::json form_to_json(const LinkingForm& f);
LinkingForm form_from_json(const nlohmann::json& j);

std::string form_to_text(const LinkingForm& f);
LinkingForm form_from_text(const std::string& text);

LinkingForm form_load(const std::string& path);
void form_save(const std::string& path, const LinkingForm& f);

/* Classification coordinates, e.g. {"ring":"Zt+","c1":"t + 2t^3",
   "c2":"t^2"}; the minus ring uses a single field "c", the integers use
   "rk" and "gs".  Unknown extra fields are ignored on input. */
nlohmann::json coord_to_json(const WittCoord& w);
WittCoord coord_from_json(const nlohmann::json& j);

/* Group descriptors, output only: {"summands":[...]} plus a "note" field
   when one is set.  Atoms serialize as {"kind":"Z"}, {"kind":"Z2"},
   {"kind":"V-quot","ideal":[...]}, {"kind":"Vod-quot","ideal":[...]} with
   "countable":true for infinite sums, and {"kind":"symbolic","name":...}. */
nlohmann::json atom_to_json(const GroupAtom& a);
nlohmann::json descriptor_to_json(const GroupDescriptor& d);

}  // namespace wittlink

#endif  // WITTLINK_IO_HPP
