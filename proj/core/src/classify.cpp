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

#include <wittlink/classify.hpp>

#include <string>
#include <utility>
#include <vector>

#include <wittlink/errors.hpp>

namespace wittlink {

namespace {

int oddpart(int j) {
  while (j > 0 && j % 2 == 0) j /= 2;
  return j;
}

/* Strip one factor of t from a polynomial with zero constant term. */
IntPoly quot_t(const IntPoly& p) {
  if (p.empty()) return {};
  return poly_trim(IntPoly(p.begin() + 1, p.end()));
}

/* 2^n q(gen) = 0 for every generator; by biadditivity and the cross-term
   identity this is equivalent to 2^n q = 0 on the whole module. */
bool is_even_type_at(const LinkingForm& m, int n) {
  for (const DyadicPoly& v : m.qvec) {
    DyadicPoly scaled = dyadic_canonical(
        make_dyadic(poly_scale(v.num, pow2(n)), v.denom_exp, v.mod, v.ring));
    if (!dyadic_is_zero(scaled)) return false;
  }
  return true;
}

LinkingForm reduce_at(const LinkingForm& m, const Submodule& s,
                      const char* what) {
  try {
    return sublagrangian_reduce(m, s).form;
  } catch (const WittError& e) {
    if (e.code() == ErrorCode::NotSubLagrangian) {
      throw WittError(ErrorCode::InternalError,
                      std::string(what) +
                          " failed to produce a sub-Lagrangian submodule");
    }
    throw;
  }
}

}  // namespace

bool witt_coord_is_zero(const WittCoord& w) {
  switch (w.ring) {
    case Ring::Z:
      return w.rk == 0 && w.gs == 0;
    case Ring::ZtMinus:
      return poly_is_zero(w.c);
    case Ring::ZtPlus:
    default:
      return poly_is_zero(w.c1) && poly_is_zero(w.c2);
  }
}

bool witt_coord_eq(const WittCoord& a, const WittCoord& b) {
  if (a.ring != b.ring) return false;
  switch (a.ring) {
    case Ring::Z:
      return a.rk == b.rk && a.gs == b.gs;
    case Ring::ZtMinus:
      return poly_eq(a.c, b.c);
    case Ring::ZtPlus:
    default:
      return poly_eq(a.c1, b.c1) && poly_eq(a.c2, b.c2);
  }
}

IntPoly witt_canonical_c1(const IntPoly& p) {
  IntPoly r = poly_mod_coeffs(p, 4);
  IntPoly ones(r.size(), 0);
  IntPoly folded;
  for (int i = 0; i < static_cast<int>(r.size()); ++i) {
    Int c = r[i];
    ones[i] = c % 2;
    if (c >= 2) {
      int j = oddpart(i);
      if (j >= static_cast<int>(folded.size())) folded.resize(j + 1, 0);
      folded[j] = (folded[j] + 1) % 2;
    }
  }
  IntPoly out = poly_add(ones, poly_scale(folded, 2));
  return poly_trim(std::move(out));
}

LinkingForm devissage_G(const LinkingForm& m, int n) {
  TateClass q0 = Q_inv(m, n, 0);
  TateClass q1 = Q_inv(m, n, 1);
  if (!tate_is_zero(q0) || !tate_is_zero(q1)) {
    throw WittError(ErrorCode::NotInKernelOfQ,
                    "a characteristic value at this level is nonzero",
                    poly_to_string(tate_is_zero(q0) ? q1.rep : q0.rep));
  }
  CharElements ce = char_elements(m, n);
  Submodule span = submodule_make(m.module, {ce.v0, ce.v1});
  Submodule t = closure(m.module, span);
  LinkingForm out = reduce_at(m, t, "the characteristic span");
  if (!is_even_type_at(out, n)) {
    throw WittError(ErrorCode::InternalError,
                    "splitting step did not reach an even-type form");
  }
  return out;
}

LinkingForm devissage_F(const LinkingForm& m, int n) {
  if (n < 2) {
    throw WittError(ErrorCode::BadDomain,
                    "exponent halving needs a level of at least two");
  }
  if (m.epsilon != 1) {
    throw WittError(ErrorCode::Unsupported,
                    "exponent halving is defined for symmetric forms");
  }
  if (m.module.exponent > n) {
    throw WittError(ErrorCode::BadDomain,
                    "module exponent exceeds the requested level");
  }
  if (!is_even_type_at(m, n)) {
    throw WittError(ErrorCode::NotEvenType,
                    "exponent halving needs an even-type form at this level");
  }
  std::vector<ModElement> half;
  for (const ModElement& g : module_generators(m.module)) {
    half.push_back(elem_scale(m.module, poly_const(pow2(n - 1)), g));
  }
  Submodule s = closure(m.module, submodule_make(m.module, half));
  LinkingForm out = reduce_at(m, s, "the scaled module");
  if (out.module.exponent > n - 1) {
    throw WittError(ErrorCode::InternalError,
                    "exponent halving did not lower the exponent");
  }
  return out;
}

LinkingForm reduce_to_exp2(const LinkingForm& m) {
  if (m.epsilon != 1) {
    throw WittError(ErrorCode::Unsupported,
                    "classification is defined for symmetric forms");
  }
  LinkingForm cur = m;
  while (cur.module.exponent > 1) {
    int n = cur.module.exponent;
    TateClass q0 = Q_inv(cur, n, 0);
    TateClass q1 = Q_inv(cur, n, 1);
    if (!tate_is_zero(q1)) {
      throw WittError(ErrorCode::InternalError,
                      "the odd characteristic value is nonzero above level "
                      "one");
    }
    if (!tate_is_zero(q0)) {
      if (n == 2) {
        throw WittError(ErrorCode::ObstructionNonzero,
                        "the level-two obstruction is nonzero",
                        poly_to_string(q0.rep));
      }
      throw WittError(ErrorCode::InternalError,
                      "a characteristic value is nonzero above level two");
    }
    cur = devissage_G(cur, n);
    cur = devissage_F(cur, n);
  }
  return cur;
}

WittCoord classify(const LinkingForm& m) {
  WittCoord w;
  w.ring = m.module.ring;
  if (m.epsilon != 1) {
    throw WittError(ErrorCode::Unsupported,
                    "classification is defined for symmetric forms");
  }
  if (w.ring == Ring::Z) {
    w.rk = rank_inv(m);
    w.gs = gauss_sum(m);
    return w;
  }
  LinkingForm at_zero = evaluate_at(m, 0);
  if (rank_inv(at_zero) != 0 || gauss_sum(at_zero) != 0) {
    throw WittError(ErrorCode::NotReducedClass,
                    "the evaluation at zero has nontrivial class over Z");
  }
  LinkingForm m2 = reduce_to_exp2(m);
  if (w.ring == Ring::ZtMinus) {
    TateClass c = Q_inv(m2, 1, 0);
    if (!c.rep.empty() && c.rep[0] != 0) {
      throw WittError(ErrorCode::InternalError,
                      "classification value has a constant term");
    }
    w.c = c.rep;
    return w;
  }
  BValue bv = B_inv(m2);
  LinkingForm r = m2;
  if (!poly_is_zero(bv.b1)) {
    r = form_sum(r, form_neg(form_N(bv.b1, poly_const(1), Ring::ZtPlus)));
  }
  if (!poly_is_zero(bv.b2)) {
    r = form_sum(r, form_neg(form_N(poly_const(1), bv.b2, Ring::ZtPlus)));
    r = form_sum(r, form_N(poly_t_power(1), quot_t(bv.b2), Ring::ZtPlus));
  }
  LinkingForm even_part = devissage_G(r, 1);
  IntPoly a = arf_invariant(alpha_pull(even_part));
  if (!a.empty() && a[0] != 0) {
    throw WittError(ErrorCode::InternalError,
                    "residual Arf value has a constant term");
  }
  w.c1 = witt_canonical_c1(poly_add(bv.b1, poly_scale(a, 2)));
  w.c2 = bv.b2;
  return w;
}

bool witt_equal(const LinkingForm& a, const LinkingForm& b) {
  if (a.module.ring != b.module.ring) {
    throw WittError(ErrorCode::RingMismatch,
                    "Witt classes live over different rings");
  }
  LinkingForm diff = form_sum(a, form_neg(b));
  if (diff.module.ring != Ring::Z) {
    LinkingForm at_zero = evaluate_at(diff, 0);
    if (rank_inv(at_zero) != 0 || gauss_sum(at_zero) != 0) return false;
  }
  return witt_coord_is_zero(classify(diff));
}

int element_order(const WittCoord& w) {
  switch (w.ring) {
    case Ring::Z: {
      int from_rank = (w.rk % 2 != 0) ? 2 : 1;
      int g = ((w.gs % 8) + 8) % 8;
      int from_gauss = (g == 0) ? 1 : (g == 4) ? 2 : (g % 2 == 0) ? 4 : 8;
      return from_rank > from_gauss ? from_rank : from_gauss;
    }
    case Ring::ZtMinus:
      return poly_is_zero(w.c) ? 1 : 2;
    case Ring::ZtPlus:
    default: {
      if (poly_is_zero(w.c1) && poly_is_zero(w.c2)) return 1;
      IntPoly folded;
      for (int i = 0; i < static_cast<int>(w.c1.size()); ++i) {
        if (w.c1[i] % 2 == 0) continue;
        int j = oddpart(i);
        if (j >= static_cast<int>(folded.size())) folded.resize(j + 1, 0);
        folded[j] = (folded[j] + 1) % 2;
      }
      return poly_is_zero(poly_trim(std::move(folded))) ? 2 : 4;
    }
  }
}

WittCoord v_action(const WittCoord& w, int k) {
  if (w.ring == Ring::Z) {
    throw WittError(ErrorCode::RingMismatch,
                    "the Verschiebung needs a polynomial ring");
  }
  if (k < 1) {
    throw WittError(ErrorCode::BadDomain, "Verschiebung index must be >= 1");
  }
  WittCoord out;
  out.ring = w.ring;
  if (w.ring == Ring::ZtMinus) {
    if (k % 2 == 0) {
      throw WittError(ErrorCode::EvenVerschiebungOnMinusRing,
                      "even Verschiebungen do not act over the twisted ring");
    }
    out.c = poly2_reduce(poly_subst_pow(w.c, k));
    return out;
  }
  out.c1 = witt_canonical_c1(poly_subst_pow(w.c1, k));
  out.c2 = (k % 2 == 0) ? IntPoly{} : poly2_reduce(poly_subst_pow(w.c2, k));
  return out;
}

}  // namespace wittlink
