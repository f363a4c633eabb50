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

#include "wittlink/forms.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "wittlink/smith.hpp"

namespace wittlink {

namespace {

/* d * 2^n as an integer polynomial mod 2^n. */
IntPoly int_times_pow2(const DyadicPoly& d, int n) {
  if (poly_is_zero(d.num)) return {};
  if (d.denom_exp > n) {
    throw WittError(ErrorCode::InternalError,
                    "dyadic value has order above the module exponent");
  }
  return poly_mod_coeffs(poly_scale(d.num, pow2(n - d.denom_exp)), pow2(n));
}

DyadicPoly eval_b_raw(const LinkingForm& m, const PolyVec& x,
                      const PolyVec& y) {
  Ring ring = m.module.ring;
  DyadicPoly acc = dyadic_zero(Modulus::ModR, ring);
  for (size_t i = 0; i < x.size(); ++i) {
    if (poly_is_zero(x[i])) continue;
    IntPoly xi = poly_involve(x[i], ring);
    for (size_t j = 0; j < y.size(); ++j) {
      if (poly_is_zero(y[j])) continue;
      acc = dyadic_add(acc,
                       dyadic_scale_plain(m.gram[i][j], poly_mul(xi, y[j])));
    }
  }
  return acc;
}

DyadicPoly eval_q_raw(const LinkingForm& m, const PolyVec& x) {
  Ring ring = m.module.ring;
  DyadicPoly acc = dyadic_zero(Modulus::ModOnePlusStar, ring);
  for (size_t i = 0; i < x.size(); ++i) {
    if (poly_is_zero(x[i])) continue;
    acc = dyadic_add(acc, dyadic_scale_conj(m.qvec[i], x[i]));
  }
  if (m.epsilon == 1) {
    for (size_t i = 0; i < x.size(); ++i) {
      if (poly_is_zero(x[i])) continue;
      IntPoly xi = poly_involve(x[i], ring);
      for (size_t j = i + 1; j < x.size(); ++j) {
        if (poly_is_zero(x[j])) continue;
        DyadicPoly cross =
            dyadic_scale_plain(m.gram[i][j], poly_mul(xi, x[j]));
        acc = dyadic_add(acc, one_plus_star(cross));
      }
    }
  }
  /* For a skew form over Z[t] the crossterm pushforward (1 - *) vanishes
     identically, so q is additive (and in fact zero). */
  return acc;
}

/* Generating homomorphisms of the dual module, as value vectors on the
   generators.  A cyclic generator of order 2^a contributes g_i -> 1/2^a;
   an MP piece contributes (phi -> p/4, tau -> 1/2) and (phi -> 1/2,
   tau -> 0). */
std::vector<DyadicVec> dual_targets(const TorsionModule& m) {
  Ring ring = m.ring;
  int g = module_num_gens(m);
  std::vector<DyadicVec> out;
  int idx = 0;
  for (const Piece& pc : m.pieces) {
    if (pc.kind == Piece::Kind::Cyclic) {
      DyadicVec v(g, dyadic_zero(Modulus::ModR, ring));
      v[idx] = make_dyadic(poly_const(1), pc.a, Modulus::ModR, ring);
      out.push_back(std::move(v));
      idx += 1;
    } else {
      DyadicVec v1(g, dyadic_zero(Modulus::ModR, ring));
      v1[idx] = make_dyadic(pc.p, 2, Modulus::ModR, ring);
      v1[idx + 1] = make_dyadic(poly_const(1), 1, Modulus::ModR, ring);
      out.push_back(std::move(v1));
      DyadicVec v2(g, dyadic_zero(Modulus::ModR, ring));
      v2[idx] = make_dyadic(poly_const(1), 1, Modulus::ModR, ring);
      out.push_back(std::move(v2));
      idx += 2;
    }
  }
  return out;
}

void check_nonsingular(const LinkingForm& f) {
  int g = module_num_gens(f.module);
  int n = f.module.exponent;
  if (n == 1) {
    /* Free over R/2R: the rescaled Gram matrix must be invertible. */
    PolyMat c(g, PolyVec(g));
    for (int i = 0; i < g; ++i) {
      for (int j = 0; j < g; ++j) c[i][j] = int_times_pow2(f.gram[i][j], 1);
    }
    SnfResult snf = smith_normal_form(c);
    for (int i = 0; i < g; ++i) {
      if (poly_degree(snf.d[i][i]) != 0) {
        throw WittError(ErrorCode::Singular,
                        "the adjoint of b is not an isomorphism");
      }
    }
    return;
  }
  /* Mixed exponent: the adjoint x -> b(x, .) must hit every generator of
     the dual module. */
  PolyMat a(g, PolyVec(g));
  for (int k = 0; k < g; ++k) {
    for (int i = 0; i < g; ++i) a[k][i] = int_times_pow2(f.gram[i][k], n);
  }
  for (const DyadicVec& target : dual_targets(f.module)) {
    PolyVec b(g);
    for (int k = 0; k < g; ++k) b[k] = int_times_pow2(target[k], n);
    SolveResult r = solve_linear_pow2(a, b, n, g);
    if (!r.consistent) {
      throw WittError(ErrorCode::Singular,
                      "the adjoint of b is not an isomorphism");
    }
  }
}

LinkingForm assemble_unchecked(TorsionModule module, int epsilon,
                               DyadicMat gram, DyadicVec qvec) {
  LinkingForm f;
  f.module = std::move(module);
  f.epsilon = epsilon;
  f.gram = std::move(gram);
  f.qvec = std::move(qvec);
  return f;
}

ModElement concat_elem(const TorsionModule& sum, const ModElement& x,
                       const ModElement& y) {
  std::vector<IntPoly> coords = x.coords;
  coords.insert(coords.end(), y.coords.begin(), y.coords.end());
  return elem_make(sum, std::move(coords));
}

bool isotropic_on_gens(const LinkingForm& m, const Submodule& s) {
  for (const ModElement& x : s.generators) {
    if (!dyadic_is_zero(eval_q(m, x))) return false;
  }
  for (size_t i = 0; i < s.generators.size(); ++i) {
    for (size_t j = i; j < s.generators.size(); ++j) {
      if (!dyadic_is_zero(eval_b(m, s.generators[i], s.generators[j]))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

LinkingForm make_form(TorsionModule module, int epsilon, DyadicMat gram,
                      DyadicVec qvec) {
  Ring ring = module.ring;
  size_t g = static_cast<size_t>(module_num_gens(module));
  if (epsilon != 1 && epsilon != -1) {
    throw WittError(ErrorCode::BadDomain, "epsilon must be +1 or -1");
  }
  if (gram.size() != g || qvec.size() != g) {
    throw WittError(ErrorCode::BadDomain,
                    "Gram matrix and quadratic vector must match the "
                    "module generators");
  }
  for (auto& row : gram) {
    if (row.size() != g) {
      throw WittError(ErrorCode::BadDomain, "Gram matrix must be square");
    }
  }
  for (size_t i = 0; i < g; ++i) {
    for (size_t j = 0; j < g; ++j) {
      if (gram[i][j].ring != ring) {
        throw WittError(ErrorCode::RingMismatch,
                        "Gram entry ring does not match the module");
      }
      if (gram[i][j].mod != Modulus::ModR) {
        throw WittError(ErrorCode::BadDomain,
                        "Gram entries must be classes mod R");
      }
      gram[i][j] = dyadic_canonical(gram[i][j]);
    }
    if (qvec[i].ring != ring) {
      throw WittError(ErrorCode::RingMismatch,
                      "quadratic value ring does not match the module");
    }
    if (qvec[i].mod != Modulus::ModOnePlusStar) {
      throw WittError(ErrorCode::BadDomain,
                      "quadratic values must be classes mod (1+*)R");
    }
    qvec[i] = dyadic_canonical(qvec[i]);
  }

  LinkingForm f = assemble_unchecked(std::move(module), epsilon,
                                     std::move(gram), std::move(qvec));
  if (g == 0) return f;

  if (epsilon == -1) {
    if (ring != Ring::ZtPlus) {
      throw WittError(ErrorCode::Unsupported,
                      "skew forms are only constructed over Z[t] with the "
                      "trivial involution");
    }
    for (size_t i = 0; i < g; ++i) {
      if (!dyadic_is_zero(f.gram[i][i])) {
        throw WittError(ErrorCode::QuadraticIncompatible,
                        "a skew form needs b(x,x) = 0");
      }
      if (!dyadic_is_zero(f.qvec[i])) {
        throw WittError(ErrorCode::QuadraticIncompatible,
                        "a skew form needs q = 0");
      }
    }
  }

  for (size_t i = 0; i < g; ++i) {
    for (size_t j = 0; j < g; ++j) {
      DyadicPoly rhs = involve(f.gram[j][i]);
      if (epsilon == -1) rhs = dyadic_neg(rhs);
      if (!dyadic_eq(f.gram[i][j], rhs)) {
        throw WittError(ErrorCode::SymmetryViolated,
                        "b(x,y) must equal epsilon * conj(b(y,x))");
      }
    }
  }

  /* The pairing must descend to the presented module: every presentation
     row, read as a formal combination of generators, must pair to zero
     with every generator.  Quadratic values are stored against canonical
     coordinates and are deliberately not subjected to the analogous
     check, so that representatives of free quadratic form classes (whose
     q does not descend to the torsion quotient) can be carried in the
     same container. */
  PolyMat rel = presentation_rows(f.module);
  for (const PolyVec& r : rel) {
    for (size_t k = 0; k < g; ++k) {
      DyadicPoly v = dyadic_zero(Modulus::ModR, ring);
      for (size_t i = 0; i < g; ++i) {
        if (poly_is_zero(r[i])) continue;
        v = dyadic_add(
            v, dyadic_scale_plain(f.gram[i][k], poly_involve(r[i], ring)));
      }
      if (!dyadic_is_zero(v)) {
        throw WittError(ErrorCode::QuadraticIncompatible,
                        "Gram entries do not descend to the module");
      }
    }
  }

  if (epsilon == 1) {
    for (size_t i = 0; i < g; ++i) {
      DyadicPoly proj = make_dyadic(f.qvec[i].num, f.qvec[i].denom_exp,
                                    Modulus::ModR, ring);
      if (!dyadic_eq(proj, f.gram[i][i])) {
        throw WittError(ErrorCode::QuadraticIncompatible,
                        "[q(x)] must equal b(x,x)");
      }
    }
  }

  check_nonsingular(f);
  return f;
}

LinkingForm zero_form(Ring ring, int epsilon) {
  return assemble_unchecked(make_module({}, ring), epsilon, {}, {});
}

LinkingForm build_template(const FormTemplate& tpl) {
  Ring ring = tpl.ring;
  switch (tpl.kind) {
    case FormTemplate::Kind::P: {
      if (ring == Ring::Z &&
          (poly_degree(tpl.p) > 0 || poly_degree(tpl.g) > 0)) {
        throw WittError(ErrorCode::BadTemplateParams,
                        "parameters over Z must be constant");
      }
      TorsionModule mod =
          make_module({Piece::cyclic(1), Piece::cyclic(1)}, ring);
      DyadicPoly half = make_dyadic(poly_const(1), 1, Modulus::ModR, ring);
      DyadicMat gram = {{dyadic_zero(Modulus::ModR, ring), half},
                        {half, dyadic_zero(Modulus::ModR, ring)}};
      DyadicVec qvec = {
          make_dyadic(tpl.p, 0, Modulus::ModOnePlusStar, ring),
          make_dyadic(tpl.g, 0, Modulus::ModOnePlusStar, ring)};
      return make_form(std::move(mod), 1, std::move(gram), std::move(qvec));
    }
    case FormTemplate::Kind::N: {
      if (ring == Ring::Z &&
          (poly_degree(tpl.p) > 0 || poly_degree(tpl.g) > 0)) {
        throw WittError(ErrorCode::BadTemplateParams,
                        "parameters over Z must be constant");
      }
      if (ring == Ring::ZtMinus &&
          (!poly_eq(tpl.p, poly_involve(tpl.p, ring)) ||
           !poly_eq(tpl.g, poly_involve(tpl.g, ring)))) {
        throw WittError(ErrorCode::BadTemplateParams,
                        "parameters must be fixed by the involution");
      }
      TorsionModule mod =
          make_module({Piece::cyclic(1), Piece::cyclic(1)}, ring);
      DyadicPoly half = make_dyadic(poly_const(1), 1, Modulus::ModR, ring);
      DyadicMat gram = {{make_dyadic(tpl.p, 1, Modulus::ModR, ring), half},
                        {half, dyadic_zero(Modulus::ModR, ring)}};
      DyadicVec qvec = {
          make_dyadic(tpl.p, 1, Modulus::ModOnePlusStar, ring),
          make_dyadic(tpl.g, 0, Modulus::ModOnePlusStar, ring)};
      return make_form(std::move(mod), 1, std::move(gram), std::move(qvec));
    }
    case FormTemplate::Kind::Rank1Z4: {
      TorsionModule mod = make_module({Piece::cyclic(2)}, ring);
      DyadicMat gram = {{make_dyadic(poly_const(1), 2, Modulus::ModR, ring)}};
      DyadicVec qvec = {
          make_dyadic(poly_const(1), 2, Modulus::ModOnePlusStar, ring)};
      return make_form(std::move(mod), 1, std::move(gram), std::move(qvec));
    }
    case FormTemplate::Kind::Hyperbolic: {
      FormTemplate p;
      p.kind = FormTemplate::Kind::P;
      p.ring = ring;
      return build_template(p);
    }
  }
  throw WittError(ErrorCode::InternalError, "unknown template kind");
}

LinkingForm form_P(IntPoly p, IntPoly g, Ring ring) {
  FormTemplate tpl;
  tpl.kind = FormTemplate::Kind::P;
  tpl.p = std::move(p);
  tpl.g = std::move(g);
  tpl.ring = ring;
  return build_template(tpl);
}

LinkingForm form_N(IntPoly p, IntPoly g, Ring ring) {
  FormTemplate tpl;
  tpl.kind = FormTemplate::Kind::N;
  tpl.p = std::move(p);
  tpl.g = std::move(g);
  tpl.ring = ring;
  return build_template(tpl);
}

LinkingForm form_rank1z4(Ring ring) {
  FormTemplate tpl;
  tpl.kind = FormTemplate::Kind::Rank1Z4;
  tpl.ring = ring;
  return build_template(tpl);
}

LinkingForm form_hyperbolic(Ring ring) {
  FormTemplate tpl;
  tpl.kind = FormTemplate::Kind::Hyperbolic;
  tpl.ring = ring;
  return build_template(tpl);
}

LinkingForm form_sum(const LinkingForm& a, const LinkingForm& b) {
  if (a.module.ring != b.module.ring) {
    throw WittError(ErrorCode::RingMismatch,
                    "cannot sum forms over different rings");
  }
  if (a.epsilon != b.epsilon) {
    throw WittError(ErrorCode::RingMismatch,
                    "cannot sum forms of different symmetry");
  }
  if (a.module.pieces.empty()) return b;
  if (b.module.pieces.empty()) return a;
  Ring ring = a.module.ring;
  std::vector<Piece> pieces = a.module.pieces;
  pieces.insert(pieces.end(), b.module.pieces.begin(), b.module.pieces.end());
  TorsionModule mod = make_module(std::move(pieces), ring);
  size_t ga = a.gram.size();
  size_t gb = b.gram.size();
  DyadicMat gram(ga + gb,
                 DyadicVec(ga + gb, dyadic_zero(Modulus::ModR, ring)));
  for (size_t i = 0; i < ga; ++i) {
    for (size_t j = 0; j < ga; ++j) gram[i][j] = a.gram[i][j];
  }
  for (size_t i = 0; i < gb; ++i) {
    for (size_t j = 0; j < gb; ++j) gram[ga + i][ga + j] = b.gram[i][j];
  }
  DyadicVec qvec = a.qvec;
  qvec.insert(qvec.end(), b.qvec.begin(), b.qvec.end());
  return assemble_unchecked(std::move(mod), a.epsilon, std::move(gram),
                            std::move(qvec));
}

LinkingForm form_neg(const LinkingForm& a) {
  LinkingForm out = a;
  for (auto& row : out.gram) {
    for (auto& e : row) e = dyadic_neg(e);
  }
  for (auto& e : out.qvec) e = dyadic_neg(e);
  return out;
}

bool form_eq(const LinkingForm& a, const LinkingForm& b) {
  if (a.epsilon != b.epsilon) return false;
  if (!module_eq(a.module, b.module)) return false;
  for (size_t i = 0; i < a.gram.size(); ++i) {
    for (size_t j = 0; j < a.gram.size(); ++j) {
      if (!dyadic_eq(a.gram[i][j], b.gram[i][j])) return false;
    }
    if (!dyadic_eq(a.qvec[i], b.qvec[i])) return false;
  }
  return true;
}

DyadicPoly eval_b(const LinkingForm& m, const ModElement& x,
                  const ModElement& y) {
  return eval_b_raw(m, elem_gen_coeffs(m.module, x),
                    elem_gen_coeffs(m.module, y));
}

DyadicPoly eval_q(const LinkingForm& m, const ModElement& x) {
  return eval_q_raw(m, elem_gen_coeffs(m.module, x));
}

Submodule perp(const LinkingForm& m, const Submodule& s) {
  const TorsionModule& mod = m.module;
  int g = module_num_gens(mod);
  if (g == 0) return submodule_make(mod, {});
  if (s.generators.empty()) {
    return submodule_make(mod, module_generators(mod));
  }
  int n = mod.exponent;
  size_t k = s.generators.size();
  PolyMat a(k, PolyVec(g));
  for (size_t j = 0; j < k; ++j) {
    PolyVec sc = elem_gen_coeffs(mod, s.generators[j]);
    for (int i = 0; i < g; ++i) {
      DyadicPoly v = dyadic_zero(Modulus::ModR, mod.ring);
      for (int l = 0; l < g; ++l) {
        if (poly_is_zero(sc[l])) continue;
        v = dyadic_add(v, dyadic_scale_plain(m.gram[i][l], sc[l]));
      }
      a[j][i] = int_times_pow2(v, n);
    }
  }
  SolveResult r = solve_linear_pow2(a, PolyVec(k), n, g);
  std::vector<ModElement> gens;
  for (const PolyVec& h : r.homogeneous) {
    PolyVec d(g);
    for (int i = 0; i < g; ++i) d[i] = poly_involve(h[i], mod.ring);
    ModElement e = elem_from_gen_coeffs(mod, d);
    if (!elem_is_zero(mod, e)) gens.push_back(std::move(e));
  }
  Submodule out = submodule_make(mod, gens);
  out.generators = reduced_generators(mod, out);
  return out;
}

bool is_lagrangian(const LinkingForm& m, const Submodule& l) {
  if (!isotropic_on_gens(m, l)) return false;
  return submodule_eq(m.module, perp(m, l), l);
}

bool is_sublagrangian(const LinkingForm& m, const Submodule& s) {
  if (!isotropic_on_gens(m, s)) return false;
  return submodule_eq(m.module, closure(m.module, s), s);
}

SubLagrangianReduction sublagrangian_reduce(const LinkingForm& m,
                                            const Submodule& s_in) {
  if (!is_sublagrangian(m, s_in)) {
    throw WittError(ErrorCode::NotSubLagrangian,
                    "the submodule is not a subLagrangian");
  }
  const TorsionModule& mod = m.module;
  SubLagrangianReduction out;
  Submodule s = submodule_make(mod, reduced_generators(mod, s_in));
  out.sub = s;
  if (s.generators.empty()) {
    out.form = m;
    out.sperp = submodule_make(mod, module_generators(mod));
    QuotientData qd;
    qd.ambient = mod;
    qd.t_generators = module_generators(mod);
    PresentedModule pm;
    pm.module = mod;
    pm.num_gens = module_num_gens(mod);
    pm.relations = presentation_rows(mod);
    for (int i = 0; i < pm.num_gens; ++i) {
      PolyVec unit(pm.num_gens);
      unit[i] = poly_const(1);
      pm.gen_vecs.push_back(std::move(unit));
    }
    qd.pres = std::move(pm);
    out.quotient = std::move(qd);
    return out;
  }
  out.sperp = perp(m, s);
  out.quotient = quotient_presentation(mod, s, out.sperp);

  const TorsionModule& qm = out.quotient.pres.module;
  int qg = module_num_gens(qm);
  std::vector<ModElement> qgens = module_generators(qm);
  std::vector<ModElement> lifts;
  for (int k = 0; k < qg; ++k) {
    lifts.push_back(quotient_section(out.quotient, qgens[k]));
  }
  DyadicMat gram(qg, DyadicVec(qg));
  DyadicVec qvec(qg);
  for (int k = 0; k < qg; ++k) {
    for (int l = 0; l < qg; ++l) gram[k][l] = eval_b(m, lifts[k], lifts[l]);
    qvec[k] = eval_q(m, lifts[k]);
  }
  out.form = make_form(qm, m.epsilon, std::move(gram), std::move(qvec));

  /* Witt certificate: the reduced form plus the negated input carries the
     graph Lagrangian {([x], x) : x in S^perp}. */
  LinkingForm sum = form_sum(out.form, form_neg(m));
  std::vector<ModElement> lag;
  for (const ModElement& t : out.quotient.t_generators) {
    ModElement img = quotient_project(out.quotient, t);
    lag.push_back(concat_elem(sum.module, img, t));
  }
  for (const ModElement& sg : s.generators) {
    lag.push_back(concat_elem(sum.module, elem_zero(qm), sg));
  }
  if (!is_lagrangian(sum, submodule_make(sum.module, lag))) {
    throw WittError(ErrorCode::InternalError,
                    "subLagrangian reduction certificate failed");
  }
  return out;
}

LinkingForm apply_verschiebung(const LinkingForm& m, int k) {
  Ring ring = m.module.ring;
  if (ring == Ring::Z) {
    throw WittError(ErrorCode::RingMismatch,
                    "the Verschiebung needs a polynomial ring");
  }
  if (k < 1) {
    throw WittError(ErrorCode::BadDomain, "Verschiebung index must be >= 1");
  }
  if (ring == Ring::ZtMinus && k % 2 == 0) {
    throw WittError(ErrorCode::EvenVerschiebungOnMinusRing,
                    "even Verschiebung does not preserve the involution "
                    "t -> -t");
  }
  std::vector<Piece> pieces;
  for (const Piece& pc : m.module.pieces) {
    if (pc.kind == Piece::Kind::Mp) {
      pieces.push_back(Piece::mp(poly_subst_pow(pc.p, k)));
    } else {
      pieces.push_back(pc);
    }
  }
  size_t g = m.gram.size();
  DyadicMat gram(g, DyadicVec(g));
  DyadicVec qvec(g);
  for (size_t i = 0; i < g; ++i) {
    for (size_t j = 0; j < g; ++j) gram[i][j] = verschiebung(m.gram[i][j], k);
    qvec[i] = verschiebung(m.qvec[i], k);
  }
  return make_form(make_module(std::move(pieces), ring), m.epsilon,
                   std::move(gram), std::move(qvec));
}

LinkingForm evaluate_at(const LinkingForm& m, int c) {
  if (c != 0 && c != 1) {
    throw WittError(ErrorCode::BadEvaluationPoint,
                    "evaluation point must be 0 or 1");
  }
  Ring ring = m.module.ring;
  if (ring == Ring::Z) {
    if (c == 1) {
      throw WittError(ErrorCode::BadEvaluationPoint,
                      "t = 1 needs the plus polynomial ring");
    }
    return m;
  }
  if (c == 1 && ring != Ring::ZtPlus) {
    throw WittError(ErrorCode::BadEvaluationPoint,
                    "t = 1 needs the plus polynomial ring");
  }
  if (m.epsilon == -1) {
    throw WittError(ErrorCode::Unsupported,
                    "skew forms over Z are not constructed");
  }
  Int cv(c);
  std::vector<Piece> pieces;
  std::vector<int> sel;
  int idx = 0;
  for (const Piece& pc : m.module.pieces) {
    if (pc.kind == Piece::Kind::Cyclic) {
      pieces.push_back(pc);
      sel.push_back(idx);
      idx += 1;
    } else {
      Int pv = poly_eval(pc.p, cv);
      if (pv % 2 != 0) {
        /* M(p) at t = c with p(c) odd is Z/4 on the image of phi; tau
           becomes twice it. */
        pieces.push_back(Piece::cyclic(2));
        sel.push_back(idx);
      } else {
        pieces.push_back(Piece::cyclic(1));
        pieces.push_back(Piece::cyclic(1));
        sel.push_back(idx);
        sel.push_back(idx + 1);
      }
      idx += 2;
    }
  }
  TorsionModule zmod = make_module(std::move(pieces), Ring::Z);
  size_t g = sel.size();
  auto ev = [&](const DyadicPoly& d) {
    return make_dyadic(poly_const(poly_eval(d.num, cv)), d.denom_exp, d.mod,
                       Ring::Z);
  };
  DyadicMat gram(g, DyadicVec(g));
  DyadicVec qvec(g);
  for (size_t k = 0; k < g; ++k) {
    for (size_t l = 0; l < g; ++l) gram[k][l] = ev(m.gram[sel[k]][sel[l]]);
    qvec[k] = ev(m.qvec[sel[k]]);
  }
  return make_form(std::move(zmod), m.epsilon, std::move(gram),
                   std::move(qvec));
}

LinkingForm form_change_basis(const LinkingForm& m, const PolyMat& p) {
  const TorsionModule& mod = m.module;
  size_t g = static_cast<size_t>(module_num_gens(mod));
  if (p.size() != g) {
    throw WittError(ErrorCode::BadDomain, "basis matrix must be square");
  }
  for (const PolyVec& row : p) {
    if (row.size() != g) {
      throw WittError(ErrorCode::BadDomain, "basis matrix must be square");
    }
  }
  std::vector<ModElement> f;
  for (size_t k = 0; k < g; ++k) {
    PolyVec col(g);
    for (size_t i = 0; i < g; ++i) col[i] = p[i][k];
    f.push_back(elem_from_gen_coeffs(mod, col));
  }
  Submodule span = submodule_make(mod, f);
  for (const ModElement& gi : module_generators(mod)) {
    if (!submodule_contains(mod, span, gi)) {
      throw WittError(ErrorCode::BadDomain,
                      "new generators do not generate the module");
    }
  }
  DyadicMat gram(g, DyadicVec(g));
  DyadicVec qvec(g);
  for (size_t k = 0; k < g; ++k) {
    for (size_t l = 0; l < g; ++l) gram[k][l] = eval_b(m, f[k], f[l]);
    qvec[k] = eval_q(m, f[k]);
  }
  return make_form(mod, m.epsilon, std::move(gram), std::move(qvec));
}

namespace {

/* Exhaustive element enumeration of a finite Z-module, in mixed-radix
   order. */
std::vector<ModElement> enumerate_z_elements(const TorsionModule& m,
                                             long long cap) {
  long long total = 1;
  std::vector<long long> radix;
  for (const Piece& pc : m.pieces) {
    long long r = 1ll << pc.a;
    radix.push_back(r);
    if (total > cap / r + 1) {
      throw WittError(ErrorCode::SearchSpaceTooLarge,
                      "module too large for exhaustive search");
    }
    total *= r;
    if (total > cap) {
      throw WittError(ErrorCode::SearchSpaceTooLarge,
                      "module too large for exhaustive search");
    }
  }
  std::vector<ModElement> out;
  std::vector<long long> digits(radix.size(), 0);
  for (long long n = 0; n < total; ++n) {
    std::vector<IntPoly> coords;
    for (size_t i = 0; i < radix.size(); ++i) {
      coords.push_back(poly_const(Int(digits[i])));
    }
    out.push_back(elem_make(m, std::move(coords)));
    for (size_t i = 0; i < radix.size(); ++i) {
      if (++digits[i] < radix[i]) break;
      digits[i] = 0;
    }
  }
  return out;
}

std::optional<Submodule> brute_z(const LinkingForm& m, long long cap) {
  const TorsionModule& mod = m.module;
  std::vector<ModElement> all = enumerate_z_elements(mod, cap);
  std::vector<ModElement> iso;
  for (const ModElement& x : all) {
    if (elem_is_zero(mod, x)) continue;
    if (dyadic_is_zero(eval_q(m, x))) iso.push_back(x);
  }
  long long visits = 0;
  std::optional<Submodule> found;
  std::function<bool(size_t, std::vector<ModElement>&)> dfs =
      [&](size_t start, std::vector<ModElement>& gens) -> bool {
    if (++visits > cap) {
      throw WittError(ErrorCode::SearchSpaceTooLarge,
                      "Lagrangian search exceeded the candidate cap");
    }
    Submodule s = submodule_make(mod, gens);
    if (is_lagrangian(m, s)) {
      found = s;
      return true;
    }
    for (size_t idx = start; idx < iso.size(); ++idx) {
      const ModElement& e = iso[idx];
      if (submodule_contains(mod, s, e)) continue;
      bool orth = true;
      for (const ModElement& g : gens) {
        if (!dyadic_is_zero(eval_b(m, e, g))) {
          orth = false;
          break;
        }
      }
      if (!orth || !dyadic_is_zero(eval_b(m, e, e))) continue;
      gens.push_back(e);
      if (dfs(idx + 1, gens)) return true;
      gens.pop_back();
    }
    return false;
  };
  std::vector<ModElement> gens;
  dfs(0, gens);
  return found;
}

std::optional<Submodule> brute_exp2(const LinkingForm& m, int bound,
                                    long long cap) {
  const TorsionModule& mod = m.module;
  int g = module_num_gens(mod);
  int bits_per = (bound + 1) * g;
  if (bits_per > 40) {
    throw WittError(ErrorCode::SearchSpaceTooLarge,
                    "degree bound too large for exhaustive search");
  }
  long long count = (1ll << bits_per) - 1;
  if (count > cap) {
    throw WittError(ErrorCode::SearchSpaceTooLarge,
                    "degree bound too large for exhaustive search");
  }
  auto decode = [&](long long code) {
    std::vector<IntPoly> coords(g);
    for (int i = 0; i < g; ++i) {
      IntPoly p;
      for (int d = 0; d <= bound; ++d) {
        if (code & 1) {
          p.resize(d + 1);
          p[d] = 1;
        }
        code >>= 1;
      }
      coords[i] = poly_trim(std::move(p));
    }
    return elem_make(mod, std::move(coords));
  };
  int rmax = g / 2;
  long long visits = 0;
  std::optional<Submodule> found;
  std::function<bool(long long, std::vector<ModElement>&)> dfs =
      [&](long long start, std::vector<ModElement>& gens) -> bool {
    if (!gens.empty()) {
      Submodule s = submodule_make(mod, gens);
      if (is_lagrangian(m, s)) {
        found = s;
        return true;
      }
    }
    if (static_cast<int>(gens.size()) >= rmax) return false;
    for (long long code = start; code <= count; ++code) {
      if (++visits > cap) {
        throw WittError(ErrorCode::SearchSpaceTooLarge,
                        "Lagrangian search exceeded the candidate cap");
      }
      ModElement e = decode(code);
      if (elem_is_zero(mod, e)) continue;
      if (!dyadic_is_zero(eval_q(m, e))) continue;
      if (!dyadic_is_zero(eval_b(m, e, e))) continue;
      bool orth = true;
      for (const ModElement& x : gens) {
        if (!dyadic_is_zero(eval_b(m, e, x))) {
          orth = false;
          break;
        }
      }
      if (!orth) continue;
      gens.push_back(e);
      if (dfs(code + 1, gens)) return true;
      gens.pop_back();
    }
    return false;
  };
  std::vector<ModElement> gens;
  dfs(1, gens);
  return found;
}

}  // namespace

std::optional<Submodule> brute_lagrangian(const LinkingForm& m, int bound,
                                          long long cap) {
  const TorsionModule& mod = m.module;
  if (mod.pieces.empty()) return submodule_make(mod, {});
  if (mod.ring == Ring::Z) return brute_z(m, cap);
  if (mod.exponent > 1) {
    throw WittError(ErrorCode::Unsupported,
                    "exhaustive search over a polynomial ring needs an "
                    "exponent-two module");
  }
  if (bound < 0) {
    throw WittError(ErrorCode::BadDomain, "degree bound must be >= 0");
  }
  return brute_exp2(m, bound, cap);
}

std::vector<SkewStep> skew_nullify(const LinkingForm& m) {
  if (m.epsilon != -1 || m.module.ring != Ring::ZtPlus) {
    throw WittError(ErrorCode::Unsupported,
                    "nullification applies to skew forms over Z[t] with "
                    "the trivial involution");
  }
  std::vector<SkewStep> chain;
  LinkingForm cur = m;
  int guard = 0;
  while (!cur.module.pieces.empty()) {
    if (++guard > 64) {
      throw WittError(ErrorCode::InternalError,
                      "skew nullification did not terminate");
    }
    const TorsionModule& mod = cur.module;
    int n = mod.exponent;
    Submodule s;
    if (n >= 2) {
      std::vector<ModElement> gens;
      for (const ModElement& gi : module_generators(mod)) {
        ModElement e = elem_scale(mod, poly_const(pow2(n - 1)), gi);
        if (!elem_is_zero(mod, e)) gens.push_back(std::move(e));
      }
      s = closure(mod, submodule_make(mod, gens));
    } else {
      s = closure(mod, submodule_make(mod, {module_generators(mod)[0]}));
    }
    SubLagrangianReduction red = sublagrangian_reduce(cur, s);
    chain.push_back({cur, s});
    cur = red.form;
  }
  return chain;
}

}  // namespace wittlink
