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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wittlink/assembly.hpp"
#include "wittlink/classify.hpp"
#include "wittlink/errors.hpp"
#include "wittlink/forms.hpp"
#include "wittlink/invariants.hpp"
#include "wittlink/io.hpp"

using nlohmann::json;
using namespace wittlink;

namespace {

struct Options {
  bool pretty = false;
  std::string out;
  std::string ring;
  int gs_cap = 22;
  int exp_cap = 20;
  int deg_cap = 2;
};

void emit(const json& j, const Options& opts) {
  std::string text = opts.pretty ? j.dump(2) : j.dump();
  if (opts.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(opts.out);
  if (!f) {
    throw WittError(ErrorCode::ParseError, "cannot write '" + opts.out + "'");
  }
  f << text << "\n";
}

void check_ring(Ring actual, const Options& opts) {
  if (opts.ring.empty()) return;
  if (ring_from_string(opts.ring) != actual) {
    throw WittError(ErrorCode::RingMismatch,
                    std::string("input lives over ") + ring_name(actual) +
                        ", not the requested " + opts.ring);
  }
}

LinkingForm load_form(const std::string& path, const Options& opts) {
  LinkingForm f = form_load(path);
  check_ring(f.module.ring, opts);
  return f;
}

int parse_sign(const std::string& tok) {
  if (tok == "1" || tok == "+1" || tok == "+") return 1;
  if (tok == "-1" || tok == "-") return -1;
  throw WittError(ErrorCode::ParseError, "sign must be +1 or -1, got '" +
                                             tok + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

json invariants_report(const LinkingForm& f, const Options& opts, int level,
                       int index) {
  json j;
  if (f.module.ring == Ring::Z) {
    j["Rk"] = rank_inv(f);
    j["GS"] = gauss_sum(f, opts.gs_cap);
    return j;
  }
  int n = level >= 0 ? level : std::max(f.module.exponent, 1);
  TateClass q = Q_inv(f, n, index);
  j["Q"] = json{{"n", n}, {"i", index}, {"value", poly_to_string(q.rep)}};
  if (f.module.ring == Ring::ZtPlus && f.module.exponent <= 1) {
    /* Defined only on reduced respectively even-type input; left out
       otherwise rather than failing the whole report. */
    try {
      BValue bv = B_inv(f);
      j["B"] = json::array({poly_to_string(bv.b1), poly_to_string(bv.b2)});
    } catch (const WittError&) {
    }
    try {
      j["Arf"] = poly_to_string(arf_invariant(alpha_pull(f)));
    } catch (const WittError&) {
    }
  }
  return j;
}

json classify_report(const LinkingForm& f) {
  WittCoord w = classify(f);
  json j = coord_to_json(w);
  j["order"] = element_order(w);
  return j;
}

ModElement parse_element(const TorsionModule& m, const std::string& text) {
  std::vector<IntPoly> coords;
  for (const std::string& part : split(text, ',')) {
    coords.push_back(parse_poly(part));
  }
  if (coords.size() != m.pieces.size()) {
    throw WittError(ErrorCode::ParseError,
                    "element needs one coordinate per module piece, got " +
                        std::to_string(coords.size()));
  }
  return elem_make(m, std::move(coords));
}

json element_coords(const TorsionModule& m, const ModElement& x) {
  json out = json::array();
  for (const IntPoly& c : x.coords) out.push_back(poly_to_compact(c));
  (void)m;
  return out;
}

json verify_report(const LinkingForm& f, const Options& opts,
                   const std::string& sub) {
  json j;
  if (!sub.empty()) {
    std::vector<ModElement> gens;
    for (const std::string& part : split(sub, ';')) {
      gens.push_back(parse_element(f.module, part));
    }
    Submodule s = submodule_make(f.module, gens);
    j["sublagrangian"] = is_sublagrangian(f, s);
    j["lagrangian"] = is_lagrangian(f, s);
    return j;
  }
  std::optional<Submodule> found = brute_lagrangian(f, opts.deg_cap);
  j["found"] = found.has_value();
  if (found) {
    json gens = json::array();
    for (const ModElement& g : found->generators) {
      gens.push_back(element_coords(f.module, g));
    }
    j["lagrangian"] = std::move(gens);
  }
  return j;
}

json vact_report(const std::string& path, const Options& opts, int k) {
  std::ifstream in(path);
  if (!in) {
    throw WittError(ErrorCode::ParseError, "cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  json j = json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) {
    throw WittError(ErrorCode::ParseError, "invalid JSON in '" + path + "'");
  }
  if (j.is_object() && j.contains("pieces")) {
    LinkingForm f = form_from_json(j);
    check_ring(f.module.ring, opts);
    return form_to_json(apply_verschiebung(f, k));
  }
  WittCoord w = coord_from_json(j);
  check_ring(w.ring, opts);
  WittCoord r = v_action(w, k);
  json out = coord_to_json(r);
  out["order"] = element_order(r);
  return out;
}

json demo_report(const std::string& name, const Options& opts) {
  if (name != "order4") {
    throw WittError(ErrorCode::ParseError, "unknown demo '" + name + "'");
  }
  LinkingForm alpha =
      form_N(poly_t_power(1), poly_const(1), Ring::ZtPlus);
  LinkingForm at_one = evaluate_at(alpha, 1);
  WittCoord w = classify(alpha);
  LinkingForm quadruple =
      form_sum(form_sum(alpha, alpha), form_sum(alpha, alpha));
  json j;
  j["demo"] = "order4";
  j["generator"] = form_to_json(alpha);
  j["Rk"] = rank_inv(at_one);
  j["GS"] = gauss_sum(at_one, opts.gs_cap);
  j["coordinate"] = coord_to_json(w);
  j["order"] = element_order(w);
  j["four_torsion_vanishes"] = witt_coord_is_zero(classify(quadruple));
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  std::string file;
  std::string sub;
  std::string eps;
  std::string demo_name;
  int k = 1;
  int level = -1;
  int index = 0;
  int degree = 0;

  CLI::App app{
      "wittlink: exact Witt-class computations for quadratic linking forms"};
  app.require_subcommand(1);
  app.add_flag("--pretty", opts.pretty, "indent the JSON output");
  app.add_option("--out", opts.out,
                 "write the report to this file instead of standard output");
  app.add_option("--ring", opts.ring,
                 "require the input to live over this ring (Zt+, Zt-, Z)");
  app.add_option("--gs-cap", opts.gs_cap,
                 "log2 bound on the module size enumerated for Gauss sums");
  app.add_option("--exp-cap", opts.exp_cap,
                 "largest two-power exponent accepted for reduction");
  app.add_option("--deg-cap", opts.deg_cap,
                 "degree bound for the brute-force Lagrangian search");

  CLI::App* c_inv = app.add_subcommand(
      "invariants", "invariants of a form: rank and Gauss sum over Z, the "
                    "characteristic-element values over the polynomial rings");
  c_inv->add_option("file", file, "form file")->required();
  c_inv->add_option("--n", level,
                    "level of the characteristic elements "
                    "(default: the module exponent)");
  c_inv->add_option("--i", index, "characteristic index, 0 or 1")
      ->check(CLI::Range(0, 1));

  CLI::App* c_cls = app.add_subcommand(
      "classify", "complete Witt-class coordinates and the element order");
  c_cls->add_option("file", file, "form file")->required();

  CLI::App* c_ver = app.add_subcommand(
      "verify-lagrangian",
      "check a candidate (sub-)Lagrangian, or search for one");
  c_ver->add_option("file", file, "form file")->required();
  c_ver->add_option(
      "--sub", sub,
      "candidate generators: coordinates comma-separated, "
      "generators separated by ';' (omit to search up to --deg-cap)");

  CLI::App* c_red = app.add_subcommand(
      "reduce", "reduce a form of two-power exponent to exponent two");
  c_red->add_option("file", file, "form file")->required();

  CLI::App* c_vact = app.add_subcommand(
      "vact", "apply the k-th Verschiebung to a form file or a "
              "classification coordinate file");
  c_vact->add_option("file", file, "form or coordinate file")->required();
  c_vact->add_option("--k", k, "Verschiebung index")->required();

  CLI::App* c_dih = app.add_subcommand(
      "dihedral", "L-group of the infinite dihedral group ring");
  c_dih->add_option("--n", degree, "degree mod 4")->required();
  c_dih->add_option("--eps", eps, "orientation signs, e.g. -1,-1")
      ->required();

  CLI::App* c_lau = app.add_subcommand(
      "laurent", "L-group of the Laurent extension of the integers");
  c_lau->add_option("--n", degree, "degree mod 4")->required();
  c_lau->add_option("--eps", eps, "involution sign, +1 or -1");

  CLI::App* c_demo =
      app.add_subcommand("demo", "built-in worked computations");
  c_demo->add_option("name", demo_name, "demo name (order4)")->required();

  for (CLI::App* sc : {c_inv, c_cls, c_ver, c_red, c_vact, c_dih, c_lau,
                       c_demo}) {
    sc->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    json err;
    err["error"] = json{{"code", "ParseError"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(c_inv)) {
      emit(invariants_report(load_form(file, opts), opts, level, index),
           opts);
    } else if (app.got_subcommand(c_cls)) {
      emit(classify_report(load_form(file, opts)), opts);
    } else if (app.got_subcommand(c_ver)) {
      emit(verify_report(load_form(file, opts), opts, sub), opts);
    } else if (app.got_subcommand(c_red)) {
      LinkingForm f = load_form(file, opts);
      if (f.module.exponent > opts.exp_cap) {
        throw WittError(ErrorCode::BadDomain,
                        "module exponent exceeds --exp-cap");
      }
      emit(form_to_json(reduce_to_exp2(f)), opts);
    } else if (app.got_subcommand(c_vact)) {
      emit(vact_report(file, opts, k), opts);
    } else if (app.got_subcommand(c_dih)) {
      std::vector<std::string> parts = split(eps, ',');
      if (parts.size() != 2) {
        throw WittError(ErrorCode::ParseError,
                        "--eps needs two signs, e.g. -1,-1");
      }
      emit(descriptor_to_json(l_group_dihedral(degree, parse_sign(parts[0]),
                                               parse_sign(parts[1]))),
           opts);
    } else if (app.got_subcommand(c_lau)) {
      int sign = eps.empty() ? 1 : parse_sign(eps);
      emit(descriptor_to_json(l_laurent(degree, sign)), opts);
    } else if (app.got_subcommand(c_demo)) {
      emit(demo_report(demo_name, opts), opts);
    }
  } catch (const WittError& e) {
    json err;
    json detail = json{{"code", error_name(e.code())},
                       {"message", std::string(e.what())}};
    if (!e.detail().empty()) detail["value"] = e.detail();
    err["error"] = std::move(detail);
    std::cout << err.dump() << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    json err;
    err["error"] =
        json{{"code", "InternalError"}, {"message", std::string(e.what())}};
    std::cout << err.dump() << "\n";
    return 1;
  }
  return 0;
}
