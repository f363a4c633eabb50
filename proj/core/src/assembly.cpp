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

#include <wittlink/assembly.hpp>

#include <utility>

#include <wittlink/errors.hpp>

namespace wittlink {

namespace {

GroupAtom atom_z() { return GroupAtom{AtomKind::Z, {}, "", false}; }

GroupAtom atom_z2() { return GroupAtom{AtomKind::Z2, {}, "", false}; }

GroupAtom atom_vquot(std::vector<std::string> ideal, bool countable = false) {
  return GroupAtom{AtomKind::VQuot, std::move(ideal), "", countable};
}

GroupAtom atom_vodquot(std::vector<std::string> ideal,
                       bool countable = false) {
  return GroupAtom{AtomKind::VOdQuot, std::move(ideal), "", countable};
}

GroupAtom atom_symbolic(std::string name) {
  return GroupAtom{AtomKind::Symbolic, {}, std::move(name), false};
}

void check_sign(int eps) {
  if (eps != 1 && eps != -1) {
    throw WittError(ErrorCode::BadDomain, "signs must be +1 or -1");
  }
}

void append(GroupDescriptor& d, const GroupDescriptor& extra) {
  d.summands.insert(d.summands.end(), extra.summands.begin(),
                    extra.summands.end());
}

/* L_n(Z) is Z, 0, Z/2, 0 for n = 0, 1, 2, 3 mod 4; the zero cases add
   nothing. */
void append_l_of_z(GroupDescriptor& d, int n) {
  int r = ((n % 4) + 4) % 4;
  if (r == 0) d.summands.push_back(atom_z());
  if (r == 2) d.summands.push_back(atom_z2());
}

}  // namespace

bool atom_eq(const GroupAtom& a, const GroupAtom& b) {
  return a.kind == b.kind && a.ideal == b.ideal && a.name == b.name &&
         a.countable == b.countable;
}

bool descriptor_eq(const GroupDescriptor& a, const GroupDescriptor& b) {
  if (a.summands.size() != b.summands.size()) return false;
  for (size_t i = 0; i < a.summands.size(); ++i) {
    if (!atom_eq(a.summands[i], b.summands[i])) return false;
  }
  return true;
}

bool descriptor_is_trivial(const GroupDescriptor& d) {
  return d.summands.empty();
}

std::string atom_to_string(const GroupAtom& a) {
  std::string core;
  switch (a.kind) {
    case AtomKind::Z:
      core = "Z";
      break;
    case AtomKind::Z2:
      core = "Z2";
      break;
    case AtomKind::VQuot:
    case AtomKind::VOdQuot: {
      core = (a.kind == AtomKind::VQuot) ? "V/<" : "Vod/<";
      for (size_t i = 0; i < a.ideal.size(); ++i) {
        if (i) core += ",";
        core += a.ideal[i];
      }
      core += ">";
      break;
    }
    case AtomKind::Symbolic:
      core = a.name;
      break;
  }
  return a.countable ? "sum_{i} " + core : core;
}

std::string descriptor_to_string(const GroupDescriptor& d) {
  if (d.summands.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < d.summands.size(); ++i) {
    if (i) out += " + ";
    out += atom_to_string(d.summands[i]);
  }
  return out;
}

GroupDescriptor unil_value(int n, int eps1, int eps2) {
  check_sign(eps1);
  check_sign(eps2);
  int r = ((n % 4) + 4) % 4;
  if (eps1 < 0 && eps2 < 0) {
    r = (r + 2) % 4;
    eps1 = eps2 = 1;
  }
  if (eps1 > 0 && eps2 < 0) std::swap(eps1, eps2);
  GroupDescriptor d;
  if (eps1 > 0) {
    /* Both antistructures untwisted. */
    if (r == 2) {
      d.summands.push_back(atom_vquot({"2", "V2-1"}));
    } else if (r == 3) {
      d.summands.push_back(atom_vquot({"4", "2V2-2"}));
      d.summands.push_back(atom_vquot({"2", "V2"}, true));
    }
    return d;
  }
  /* Mixed pair: one copy per even degree, countably many per odd. */
  d.summands.push_back(atom_vodquot({"2"}, r % 2 != 0));
  return d;
}

GroupDescriptor l_group_dihedral(int n, int eps1, int eps2) {
  check_sign(eps1);
  check_sign(eps2);
  if (eps2 < eps1) {
    throw WittError(ErrorCode::BadSignOrder,
                    "the second sign must not be smaller than the first");
  }
  int r = ((n % 4) + 4) % 4;
  GroupDescriptor d;
  if (r == 1 && eps1 < 0 && eps2 < 0) {
    append(d, unil_value(1, -1, -1));
    append_l_of_z(d, 0);
    return d;
  }
  std::string tag1 = eps1 < 0 ? ",-" : "";
  std::string tag2 = eps2 < 0 ? ",-" : "";
  d.summands.push_back(
      atom_symbolic("Ltilde_" + std::to_string(r) + "(Z[Z2]" + tag1 + ")"));
  d.summands.push_back(
      atom_symbolic("L_" + std::to_string(r) + "(Z[Z2]" + tag2 + ")"));
  append(d, unil_value(r, eps1, eps2));
  return d;
}

GroupDescriptor l_laurent(int n, int sign) {
  check_sign(sign);
  int r = ((n % 4) + 4) % 4;
  GroupDescriptor d;
  if (sign > 0) {
    append_l_of_z(d, r);
    append_l_of_z(d, r);
    GroupDescriptor nl = unil_value(r, 1, 1);
    append(d, nl);
    append(d, nl);
    return d;
  }
  append_l_of_z(d, r);
  append_l_of_z(d, r + 2);
  GroupDescriptor nl = unil_value(r, -1, 1);
  append(d, nl);
  append(d, nl);
  d.note = "minus-involution splitting quoted as stated, not derived here";
  return d;
}

}  // namespace wittlink
