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

#include "wittlink/ring.hpp"

#include <algorithm>
#include <sstream>

namespace wittlink {

namespace {

const Int kZero = 0;

Int imod(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

Int pow2(int k) {
  Int r = 1;
  return r << k;
}

const char* ring_name(Ring ring) {
  switch (ring) {
    case Ring::ZtPlus:
      return "Zt+";
    case Ring::ZtMinus:
      return "Zt-";
    case Ring::Z:
      return "Z";
  }
  return "?";
}

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EvenVerschiebungOnMinusRing:
      return "EvenVerschiebungOnMinusRing";
    case ErrorCode::NotInSubring:
      return "NotInSubring";
    case ErrorCode::NotSelfConjugate:
      return "NotSelfConjugate";
    case ErrorCode::DenominatorTooLarge:
      return "DenominatorTooLarge";
    case ErrorCode::NotLengthOne:
      return "NotLengthOne";
    case ErrorCode::BadRing:
      return "BadRing";
    case ErrorCode::ExponentTooHigh:
      return "ExponentTooHigh";
    case ErrorCode::NotASubmodule:
      return "NotASubmodule";
    case ErrorCode::QuotientNotLengthOne:
      return "QuotientNotLengthOne";
    case ErrorCode::Singular:
      return "Singular";
    case ErrorCode::SymmetryViolated:
      return "SymmetryViolated";
    case ErrorCode::QuadraticIncompatible:
      return "QuadraticIncompatible";
    case ErrorCode::BadTemplateParams:
      return "BadTemplateParams";
    case ErrorCode::RingMismatch:
      return "RingMismatch";
    case ErrorCode::NotSubLagrangian:
      return "NotSubLagrangian";
    case ErrorCode::BadEvaluationPoint:
      return "BadEvaluationPoint";
    case ErrorCode::SearchSpaceTooLarge:
      return "SearchSpaceTooLarge";
    case ErrorCode::Unsupported:
      return "Unsupported";
    case ErrorCode::ModuleTooLarge:
      return "ModuleTooLarge";
    case ErrorCode::NoCandidateMatch:
      return "NoCandidateMatch";
    case ErrorCode::NotEvenType:
      return "NotEvenType";
    case ErrorCode::NotSymplectic:
      return "NotSymplectic";
    case ErrorCode::BadDomain:
      return "BadDomain";
    case ErrorCode::NotReducedClass:
      return "NotReducedClass";
    case ErrorCode::NotInKernelOfQ:
      return "NotInKernelOfQ";
    case ErrorCode::ObstructionNonzero:
      return "ObstructionNonzero";
    case ErrorCode::BadSignOrder:
      return "BadSignOrder";
    case ErrorCode::ParseError:
      return "ParseError";
    case ErrorCode::InternalError:
      return "InternalError";
  }
  return "?";
}

/* --- Plain polynomial arithmetic ------------------------------------- */

IntPoly poly_trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool poly_is_zero(const IntPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const Int& c) { return c == 0; });
}

int poly_degree(const IntPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] != 0) return i;
  }
  return -1;
}

const Int& poly_coeff(const IntPoly& p, int i) {
  if (i < 0 || i >= static_cast<int>(p.size())) return kZero;
  return p[i];
}

IntPoly poly_const(const Int& c) {
  if (c == 0) return {};
  return {c};
}

IntPoly poly_t_power(int k) {
  IntPoly p(k + 1, 0);
  p[k] = 1;
  return p;
}

IntPoly poly_from(std::initializer_list<long long> coeffs) {
  IntPoly p;
  p.reserve(coeffs.size());
  for (long long c : coeffs) p.push_back(c);
  return poly_trim(std::move(p));
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_trim(std::move(r));
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(std::move(r));
}

IntPoly poly_neg(const IntPoly& a) {
  IntPoly r = a;
  for (Int& c : r) c = -c;
  return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return poly_trim(std::move(r));
}

IntPoly poly_scale(const IntPoly& a, const Int& c) {
  IntPoly r = a;
  for (Int& x : r) x *= c;
  return poly_trim(std::move(r));
}

IntPoly poly_subst_pow(const IntPoly& p, int k) {
  if (k < 1) throw WittError(ErrorCode::InternalError, "substitution power < 1");
  if (p.empty()) return {};
  IntPoly r((p.size() - 1) * k + 1, 0);
  for (size_t i = 0; i < p.size(); ++i) r[i * k] = p[i];
  return poly_trim(std::move(r));
}

IntPoly poly_mod_coeffs(const IntPoly& p, const Int& m) {
  IntPoly r = p;
  for (Int& c : r) c = imod(c, m);
  return poly_trim(std::move(r));
}

Int poly_eval(const IntPoly& p, const Int& at) {
  Int r = 0;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) r = r * at + p[i];
  return r;
}

IntPoly poly_involve(const IntPoly& p, Ring ring) {
  if (ring != Ring::ZtMinus) return poly_trim(p);
  IntPoly r = p;
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return poly_trim(std::move(r));
}

bool poly_eq(const IntPoly& a, const IntPoly& b) {
  return poly_trim(a) == poly_trim(b);
}

std::string poly_to_string(const IntPoly& p) {
  IntPoly q = poly_trim(p);
  if (q.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    Int c = q[i];
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      if (c < 0) {
        out << " - ";
        c = -c;
      } else {
        out << " + ";
      }
    }
    if (i == 0) {
      out << c;
    } else {
      if (c != 1) out << c;
      out << "t";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

/* --- Mod-2 polynomial layer ------------------------------------------ */

IntPoly poly2_reduce(const IntPoly& p) {
  IntPoly r = p;
  for (Int& c : r) c = imod(c, 2);
  return poly_trim(std::move(r));
}

IntPoly poly2_add(const IntPoly& a, const IntPoly& b) {
  return poly2_reduce(poly_add(a, b));
}

IntPoly poly2_mul(const IntPoly& a, const IntPoly& b) {
  return poly2_reduce(poly_mul(poly2_reduce(a), poly2_reduce(b)));
}

IntPoly poly2_divmod(const IntPoly& a, const IntPoly& b, IntPoly* rem) {
  IntPoly r = poly2_reduce(a);
  IntPoly d = poly2_reduce(b);
  if (d.empty()) {
    throw WittError(ErrorCode::InternalError, "division by zero in Z2[t]");
  }
  int db = poly_degree(d);
  IntPoly quot;
  while (poly_degree(r) >= db) {
    int shift = poly_degree(r) - db;
    if (static_cast<int>(quot.size()) < shift + 1) quot.resize(shift + 1, 0);
    quot[shift] = (quot[shift] + 1) % 2;
    for (int i = 0; i <= db; ++i) {
      if (d[i] != 0) r[i + shift] = (r[i + shift] + 1) % 2;
    }
    r = poly_trim(std::move(r));
  }
  if (rem) *rem = r;
  return poly_trim(std::move(quot));
}

IntPoly poly2_gcd(IntPoly a, IntPoly b) {
  a = poly2_reduce(a);
  b = poly2_reduce(b);
  while (!b.empty()) {
    IntPoly r;
    poly2_divmod(a, b, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

namespace {

/* Extended gcd of two polynomials mod 2: g = u*a + v*b. */
void poly2_ext_gcd(const IntPoly& a, const IntPoly& b, IntPoly& g, IntPoly& u,
                   IntPoly& v) {
  IntPoly r0 = poly2_reduce(a), r1 = poly2_reduce(b);
  IntPoly s0 = poly_from({1}), s1 = {};
  IntPoly t0 = {}, t1 = poly_from({1});
  while (!r1.empty()) {
    IntPoly rem;
    IntPoly q = poly2_divmod(r0, r1, &rem);
    IntPoly s2 = poly2_add(s0, poly2_mul(q, s1));
    IntPoly t2 = poly2_add(t0, poly2_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  g = std::move(r0);
  u = std::move(s0);
  v = std::move(t0);
}

}  // namespace

std::pair<IntPoly, std::vector<IntPoly>> poly2_bezout(
    const std::vector<IntPoly>& xs) {
  std::vector<IntPoly> coeffs(xs.size());
  if (xs.empty()) return {{}, coeffs};
  IntPoly g = poly2_reduce(xs[0]);
  coeffs[0] = g.empty() ? IntPoly{} : poly_from({1});
  for (size_t i = 1; i < xs.size(); ++i) {
    IntPoly g2, u, v;
    poly2_ext_gcd(g, xs[i], g2, u, v);
    for (size_t j = 0; j < i; ++j) coeffs[j] = poly2_mul(coeffs[j], u);
    coeffs[i] = v;
    g = std::move(g2);
  }
  return {g, coeffs};
}

std::pair<IntPoly, IntPoly> evodd_decompose(const IntPoly& p) {
  IntPoly q = poly2_reduce(p);
  IntPoly ev, od;
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    if (i % 2 == 0) {
      if (ev.size() < i / 2 + 1) ev.resize(i / 2 + 1, 0);
      ev[i / 2] = 1;
    } else {
      if (od.size() < i / 2 + 1) od.resize(i / 2 + 1, 0);
      od[i / 2] = 1;
    }
  }
  return {poly_trim(std::move(ev)), poly_trim(std::move(od))};
}

IntPoly poly2_frobenius(const IntPoly& p) {
  IntPoly q = poly2_reduce(p);
  if (q.empty()) return {};
  return poly_subst_pow(q, 2);
}

IntPoly arf_reduce(IntPoly p, Subring subring) {
  IntPoly q = poly2_reduce(p);
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    bool ok = true;
    switch (subring) {
      case Subring::Z2t:
        break;
      case Subring::Z2t2:
        ok = (i % 2 == 0);
        break;
      case Subring::t2Z2t2:
        ok = (i % 2 == 0 && i != 0);
        break;
    }
    if (!ok) {
      throw WittError(ErrorCode::NotInSubring,
                      std::string("polynomial not in subring: has term t^") +
                          std::to_string(i));
    }
  }
  IntPoly out;
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    size_t e = i;
    if (subring == Subring::Z2t) {
      while (e != 0 && e % 2 == 0) e /= 2;
    } else {
      while (e != 0 && e % 4 == 0) e /= 2;
    }
    if (out.size() < e + 1) out.resize(e + 1, 0);
    out[e] = (out[e] + 1) % 2;
  }
  return poly_trim(std::move(out));
}

/* --- Dyadic fractions over the base ring ----------------------------- */

namespace {

/* Reduce the numerator into the window determined by the modulus and the
   current denominator exponent k.  Over ZtMinus the quadratic quotient
   (1+*)R only touches even exponents: odd-exponent numerator coefficients
   are exact integers there. */
void apply_modulus(IntPoly& num, int k, Modulus mod, Ring ring) {
  switch (mod) {
    case Modulus::None:
      return;
    case Modulus::ModR:
      num = poly_mod_coeffs(num, pow2(k));
      return;
    case Modulus::Mod2R:
      num = poly_mod_coeffs(num, pow2(k + 1));
      return;
    case Modulus::ModOnePlusStar: {
      if (ring == Ring::ZtMinus) {
        Int m = pow2(k + 1);
        for (size_t i = 0; i < num.size(); i += 2) num[i] = imod(num[i], m);
        num = poly_trim(std::move(num));
      } else {
        num = poly_mod_coeffs(num, pow2(k + 1));
      }
      return;
    }
  }
}

}  // namespace

DyadicPoly dyadic_canonical(DyadicPoly x) {
  if (x.denom_exp < 0) {
    throw WittError(ErrorCode::InternalError, "negative denominator exponent");
  }
  if (x.ring == Ring::Z && poly_degree(x.num) > 0) {
    throw WittError(ErrorCode::BadRing,
                    "nonconstant polynomial over the integers");
  }
  x.num = poly_trim(std::move(x.num));
  apply_modulus(x.num, x.denom_exp, x.mod, x.ring);
  while (x.denom_exp > 0) {
    bool all_even =
        std::all_of(x.num.begin(), x.num.end(),
                    [](const Int& c) { return c % 2 == 0; });
    if (!all_even) break;
    for (Int& c : x.num) c /= 2;
    --x.denom_exp;
    x.num = poly_trim(std::move(x.num));
  }
  apply_modulus(x.num, x.denom_exp, x.mod, x.ring);
  x.num = poly_trim(std::move(x.num));
  return x;
}

DyadicPoly make_dyadic(IntPoly num, int denom_exp, Modulus mod, Ring ring) {
  DyadicPoly x;
  x.num = std::move(num);
  x.denom_exp = denom_exp;
  x.mod = mod;
  x.ring = ring;
  return dyadic_canonical(std::move(x));
}

bool dyadic_eq(const DyadicPoly& a, const DyadicPoly& b) {
  if (a.mod != b.mod || a.ring != b.ring) return false;
  DyadicPoly ca = dyadic_canonical(a);
  DyadicPoly cb = dyadic_canonical(b);
  return ca.denom_exp == cb.denom_exp && ca.num == cb.num;
}

bool dyadic_is_zero(const DyadicPoly& x) {
  DyadicPoly c = dyadic_canonical(x);
  return c.num.empty();
}

DyadicPoly dyadic_zero(Modulus mod, Ring ring) {
  return make_dyadic({}, 0, mod, ring);
}

namespace {

void require_same_quotient(const DyadicPoly& a, const DyadicPoly& b) {
  if (a.mod != b.mod || a.ring != b.ring) {
    throw WittError(ErrorCode::RingMismatch,
                    "dyadic values live in different quotients");
  }
}

}  // namespace

DyadicPoly dyadic_add(const DyadicPoly& a, const DyadicPoly& b) {
  require_same_quotient(a, b);
  int k = std::max(a.denom_exp, b.denom_exp);
  IntPoly na = poly_scale(a.num, pow2(k - a.denom_exp));
  IntPoly nb = poly_scale(b.num, pow2(k - b.denom_exp));
  return make_dyadic(poly_add(na, nb), k, a.mod, a.ring);
}

DyadicPoly dyadic_sub(const DyadicPoly& a, const DyadicPoly& b) {
  return dyadic_add(a, dyadic_neg(b));
}

DyadicPoly dyadic_neg(const DyadicPoly& a) {
  return make_dyadic(poly_neg(a.num), a.denom_exp, a.mod, a.ring);
}

DyadicPoly dyadic_scale_plain(const DyadicPoly& x, const IntPoly& r) {
  if (x.mod == Modulus::ModOnePlusStar) {
    throw WittError(ErrorCode::InternalError,
                    "plain scaling is not defined on the quadratic quotient");
  }
  return make_dyadic(poly_mul(x.num, r), x.denom_exp, x.mod, x.ring);
}

DyadicPoly dyadic_scale_conj(const DyadicPoly& x, const IntPoly& r) {
  IntPoly rr = poly_mul(r, poly_involve(r, x.ring));
  return make_dyadic(poly_mul(x.num, rr), x.denom_exp, x.mod, x.ring);
}

DyadicPoly involve(const DyadicPoly& x) {
  return make_dyadic(poly_involve(x.num, x.ring), x.denom_exp, x.mod, x.ring);
}

DyadicPoly verschiebung(const DyadicPoly& x, int k) {
  if (k < 1) throw WittError(ErrorCode::InternalError, "verschiebung power < 1");
  if (x.ring == Ring::ZtMinus && k % 2 == 0) {
    throw WittError(ErrorCode::EvenVerschiebungOnMinusRing,
                    "even verschiebung does not respect t -> -t");
  }
  return make_dyadic(poly_subst_pow(x.num, k), x.denom_exp, x.mod, x.ring);
}

DyadicPoly one_plus_star(const DyadicPoly& x) {
  if (x.mod == Modulus::ModOnePlusStar) {
    throw WittError(ErrorCode::InternalError,
                    "value already lives in the quadratic quotient");
  }
  IntPoly n = poly_add(x.num, poly_involve(x.num, x.ring));
  return make_dyadic(std::move(n), x.denom_exp, Modulus::ModOnePlusStar,
                     x.ring);
}

std::string dyadic_to_string(const DyadicPoly& x) {
  DyadicPoly c = dyadic_canonical(x);
  std::string s = poly_to_string(c.num);
  if (c.denom_exp > 0 && !c.num.empty()) {
    s += "/2^" + std::to_string(c.denom_exp);
  }
  return s;
}

/* --- Tate classes ----------------------------------------------------- */

TateClass make_tate(IntPoly rep, Ring ring) {
  TateClass x;
  x.rep = poly2_reduce(rep);
  x.ring = ring;
  for (size_t i = 0; i < x.rep.size(); ++i) {
    if (x.rep[i] == 0) continue;
    bool ok = true;
    if (ring == Ring::ZtMinus) ok = (i % 2 == 0);
    if (ring == Ring::Z) ok = (i == 0);
    if (!ok) {
      throw WittError(ErrorCode::NotSelfConjugate,
                      std::string("representative has term t^") +
                          std::to_string(i) +
                          " outside the self-conjugate subring");
    }
  }
  return x;
}

bool tate_eq(const TateClass& a, const TateClass& b) {
  return a.ring == b.ring && a.rep == b.rep;
}

bool tate_is_zero(const TateClass& x) { return x.rep.empty(); }

TateClass tate_add(const TateClass& a, const TateClass& b) {
  if (a.ring != b.ring) {
    throw WittError(ErrorCode::RingMismatch, "tate classes over different rings");
  }
  return make_tate(poly2_add(a.rep, b.rep), a.ring);
}

TateClass tate_act(const IntPoly& a, const TateClass& x) {
  return make_tate(poly2_mul(poly2_frobenius(a), x.rep), x.ring);
}

namespace {

DyadicPoly to_half_mod_r(const DyadicPoly& x) {
  DyadicPoly c = x;
  c.mod = Modulus::ModR;
  c = dyadic_canonical(std::move(c));
  if (c.denom_exp > 1) {
    throw WittError(ErrorCode::DenominatorTooLarge,
                    "tate maps require denominator at most 2");
  }
  return c;
}

}  // namespace

TateClass tate_one_plus_star(const DyadicPoly& x) {
  DyadicPoly c = to_half_mod_r(x);
  if (c.denom_exp == 0) return make_tate({}, c.ring);
  IntPoly u = c.num;
  if (c.ring == Ring::ZtMinus) {
    /* (u + involve(u)) / 2 keeps exactly the even part of u. */
    for (size_t i = 1; i < u.size(); i += 2) u[i] = 0;
  }
  return make_tate(poly2_reduce(u), c.ring);
}

IntPoly tate_two(const DyadicPoly& x) {
  DyadicPoly c = to_half_mod_r(x);
  if (c.denom_exp == 0) return {};
  return poly2_reduce(c.num);
}

DyadicPoly tate_one_plus_star_section(const TateClass& c) {
  return make_dyadic(c.rep, 1, Modulus::ModR, c.ring);
}

DyadicPoly tate_two_inv(const IntPoly& y, Ring ring) {
  return make_dyadic(poly2_reduce(y), 1, Modulus::ModR, ring);
}

}  // namespace wittlink
