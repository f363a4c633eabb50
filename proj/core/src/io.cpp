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

#include "wittlink/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "wittlink/errors.hpp"

namespace wittlink {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw WittError(ErrorCode::ParseError, what);
}

std::string strip_space(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) r.push_back(c);
  }
  return r;
}

/* Cursor over the whitespace-stripped input. */
struct Scanner {
  const std::string& s;
  size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  Int integer() {
    size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) bad("expected a number in '" + s + "'");
    return Int(s.substr(start, pos - start));
  }

  int small_integer(const char* what) {
    Int v = integer();
    if (v > 1000000) bad(std::string(what) + " out of range in '" + s + "'");
    return static_cast<int>(v);
  }
};

/* One term: INT, t, INT t, t^INT, INT t^INT. */
void parse_term(Scanner& sc, bool negate, IntPoly& acc) {
  Int coeff = 1;
  bool saw_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
    coeff = sc.integer();
    saw_coeff = true;
  }
  int exp = 0;
  if (sc.eat('t')) {
    exp = 1;
    if (sc.eat('^')) exp = sc.small_integer("exponent");
  } else if (!saw_coeff) {
    bad("expected a term in '" + sc.s + "'");
  }
  if (negate) coeff = -coeff;
  if (exp >= static_cast<int>(acc.size())) acc.resize(exp + 1, 0);
  acc[exp] += coeff;
}

IntPoly parse_poly_at(Scanner& sc) {
  IntPoly acc;
  bool negate = sc.eat('-');
  parse_term(sc, negate, acc);
  while (!sc.done()) {
    if (sc.eat('+')) {
      negate = false;
    } else if (sc.eat('-')) {
      negate = true;
    } else {
      break;
    }
    parse_term(sc, negate, acc);
  }
  return poly_trim(std::move(acc));
}

std::string compact_term(const Int& coeff, size_t exp, bool first) {
  Int c = coeff;
  std::string out;
  if (c < 0) {
    out += "-";
    c = -c;
  } else if (!first) {
    out += "+";
  }
  std::ostringstream num;
  if (exp == 0) {
    num << c;
  } else {
    if (c != 1) num << c;
    num << "t";
    if (exp > 1) num << "^" << exp;
  }
  return out + num.str();
}

const char* piece_kind_name(Piece::Kind k) {
  return k == Piece::Kind::Cyclic ? "cyclic" : "Mp";
}

std::string get_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    bad(std::string("missing string field '") + key + "'");
  }
  return j[key].get<std::string>();
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    bad(std::string("missing integer field '") + key + "'");
  }
  return j[key].get<int>();
}

}  // namespace

IntPoly parse_poly(const std::string& text) {
  std::string s = strip_space(text);
  if (s.empty()) bad("empty polynomial");
  Scanner sc{s};
  IntPoly p = parse_poly_at(sc);
  if (!sc.done()) bad("trailing input in '" + s + "'");
  return p;
}

ParsedValue parse_value(const std::string& text) {
  std::string s = strip_space(text);
  if (s.empty()) bad("empty value");
  Scanner sc{s};
  ParsedValue v;
  v.num = parse_poly_at(sc);
  if (sc.eat('/')) {
    if (!sc.eat('2') || !sc.eat('^')) {
      bad("denominator must be written 2^k in '" + s + "'");
    }
    v.denom_exp = sc.small_integer("denominator exponent");
  }
  if (!sc.done()) bad("trailing input in '" + s + "'");
  return v;
}

std::string poly_to_compact(const IntPoly& p) {
  IntPoly q = poly_trim(p);
  if (q.empty()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    out += compact_term(q[i], i, first);
    first = false;
  }
  return out;
}

std::string value_to_compact(const IntPoly& num, int denom_exp) {
  std::string out = poly_to_compact(num);
  if (denom_exp > 0 && !poly_is_zero(num)) {
    out += "/2^" + std::to_string(denom_exp);
  }
  return out;
}

std::string dyadic_value_string(const DyadicPoly& x) {
  DyadicPoly c = dyadic_canonical(x);
  return value_to_compact(c.num, c.denom_exp);
}

Ring ring_from_string(const std::string& text) {
  if (text == "Zt+") return Ring::ZtPlus;
  if (text == "Zt-") return Ring::ZtMinus;
  if (text == "Z") return Ring::Z;
  bad("unknown ring '" + text + "'");
}

nlohmann::json module_to_json(const TorsionModule& m) {
  json pieces = json::array();
  for (const Piece& p : m.pieces) {
    json jp;
    jp["kind"] = piece_kind_name(p.kind);
    if (p.kind == Piece::Kind::Cyclic) {
      jp["a"] = p.a;
    } else {
      jp["p"] = poly_to_compact(p.p);
    }
    pieces.push_back(std::move(jp));
  }
  json j;
  j["ring"] = ring_name(m.ring);
  j["pieces"] = std::move(pieces);
  return j;
}

TorsionModule module_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("module must be a JSON object");
  Ring ring = ring_from_string(get_string(j, "ring"));
  if (!j.contains("pieces") || !j["pieces"].is_array()) {
    bad("missing array field 'pieces'");
  }
  std::vector<Piece> pieces;
  for (const json& jp : j["pieces"]) {
    if (!jp.is_object()) bad("each piece must be a JSON object");
    std::string kind = get_string(jp, "kind");
    if (kind == "cyclic") {
      pieces.push_back(Piece::cyclic(get_int(jp, "a")));
    } else if (kind == "Mp") {
      pieces.push_back(Piece::mp(parse_poly(get_string(jp, "p"))));
    } else {
      bad("unknown piece kind '" + kind + "'");
    }
  }
  return make_module(std::move(pieces), ring);
}

nlohmann::json form_to_json(const LinkingForm& f) {
  json j = module_to_json(f.module);
  j["epsilon"] = f.epsilon;
  json b = json::array();
  for (const DyadicVec& row : f.gram) {
    json jr = json::array();
    for (const DyadicPoly& x : row) jr.push_back(dyadic_value_string(x));
    b.push_back(std::move(jr));
  }
  j["b"] = std::move(b);
  json q = json::array();
  for (const DyadicPoly& x : f.qvec) q.push_back(dyadic_value_string(x));
  j["q"] = std::move(q);
  return j;
}

LinkingForm form_from_json(const nlohmann::json& j) {
  TorsionModule m = module_from_json(j);
  int epsilon = get_int(j, "epsilon");
  if (!j.contains("b") || !j["b"].is_array()) bad("missing array field 'b'");
  if (!j.contains("q") || !j["q"].is_array()) bad("missing array field 'q'");
  DyadicMat gram;
  for (const json& jr : j["b"]) {
    if (!jr.is_array()) bad("'b' must be a matrix of value strings");
    DyadicVec row;
    for (const json& je : jr) {
      if (!je.is_string()) bad("'b' must be a matrix of value strings");
      ParsedValue v = parse_value(je.get<std::string>());
      row.push_back(
          make_dyadic(v.num, v.denom_exp, Modulus::ModR, m.ring));
    }
    gram.push_back(std::move(row));
  }
  DyadicVec qvec;
  for (const json& je : j["q"]) {
    if (!je.is_string()) bad("'q' must be an array of value strings");
    ParsedValue v = parse_value(je.get<std::string>());
    qvec.push_back(
        make_dyadic(v.num, v.denom_exp, Modulus::ModOnePlusStar, m.ring));
  }
  return make_form(std::move(m), epsilon, std::move(gram), std::move(qvec));
}

std::string form_to_text(const LinkingForm& f) { return form_to_json(f).dump(); }

LinkingForm form_from_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("invalid JSON");
  return form_from_json(j);
}

LinkingForm form_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return form_from_text(buf.str());
}

void form_save(const std::string& path, const LinkingForm& f) {
  std::ofstream out(path);
  if (!out) bad("cannot write '" + path + "'");
  out << form_to_text(f) << "\n";
}

nlohmann::json coord_to_json(const WittCoord& w) {
  json j;
  j["ring"] = ring_name(w.ring);
  switch (w.ring) {
    case Ring::ZtPlus:
      j["c1"] = poly_to_string(w.c1);
      j["c2"] = poly_to_string(w.c2);
      break;
    case Ring::ZtMinus:
      j["c"] = poly_to_string(w.c);
      break;
    case Ring::Z:
      j["rk"] = w.rk;
      j["gs"] = w.gs;
      break;
  }
  return j;
}

WittCoord coord_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("coordinate must be a JSON object");
  WittCoord w;
  w.ring = ring_from_string(get_string(j, "ring"));
  switch (w.ring) {
    case Ring::ZtPlus:
      w.c1 = parse_poly(get_string(j, "c1"));
      w.c2 = parse_poly(get_string(j, "c2"));
      break;
    case Ring::ZtMinus:
      w.c = parse_poly(get_string(j, "c"));
      break;
    case Ring::Z:
      w.rk = get_int(j, "rk");
      w.gs = get_int(j, "gs");
      break;
  }
  return w;
}

nlohmann::json atom_to_json(const GroupAtom& a) {
  json j;
  switch (a.kind) {
    case AtomKind::Z:
      j["kind"] = "Z";
      break;
    case AtomKind::Z2:
      j["kind"] = "Z2";
      break;
    case AtomKind::VQuot:
      j["kind"] = "V-quot";
      j["ideal"] = a.ideal;
      break;
    case AtomKind::VOdQuot:
      j["kind"] = "Vod-quot";
      j["ideal"] = a.ideal;
      break;
    case AtomKind::Symbolic:
      j["kind"] = "symbolic";
      j["name"] = a.name;
      break;
  }
  if (a.countable) j["countable"] = true;
  return j;
}

nlohmann::json descriptor_to_json(const GroupDescriptor& d) {
  json summands = json::array();
  for (const GroupAtom& a : d.summands) summands.push_back(atom_to_json(a));
  json j;
  j["summands"] = std::move(summands);
  if (!d.note.empty()) j["note"] = d.note;
  return j;
}

}  // namespace wittlink
