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

#include "wittlink/invariants.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

#include "wittlink/smith.hpp"

namespace wittlink {

namespace {

void require_level(int level) {
  if (level < 1 || level > 26) {
    throw WittError(ErrorCode::BadDomain, "cyclotomic level out of range");
  }
}

void require_same_level(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.level != b.level) {
    throw WittError(ErrorCode::BadDomain, "cyclotomic levels disagree");
  }
}

/* sqrt(2) = x^{2^{L-2}} + x^{-2^{L-2}}, with the negative power folded into
   the ring as -x^{3 * 2^{L-2}}. */
CyclotomicInt cyc_sqrt2(int level) {
  Int quarter = pow2(level - 2);
  CyclotomicInt a = cyc_root_power(level, quarter);
  CyclotomicInt b = cyc_scale(cyc_root_power(level, 3 * quarter), Int(-1));
  return cyc_add(a, b);
}

/* sqrt|M| e^{2 pi i k / 8} for |M| = 2^log2m. */
CyclotomicInt gauss_candidate(int level, int log2m, int k) {
  CyclotomicInt c = cyc_root_power(level, Int(k) * pow2(level - 2));
  c = cyc_scale(c, pow2(log2m / 2));
  if (log2m % 2 != 0) c = cyc_mul(c, cyc_sqrt2(level));
  return c;
}

IntPoly shift_down_one(const IntPoly& p) {
  IntPoly out;
  for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i]);
  return poly_trim(std::move(out));
}

bool has_odd_support(const IntPoly& p) {
  for (size_t i = 1; i < p.size(); i += 2) {
    if (p[i] != 0) return true;
  }
  return false;
}

void check_coords(const QuadraticFormZ2& f, const PolyVec& x) {
  if (x.size() != f.lambda.size()) {
    throw WittError(ErrorCode::BadDomain,
                    "coordinate vector does not match the rank");
  }
}

/* z += c * v on mod-2 coordinate vectors. */
void vec2_accumulate(PolyVec& z, const IntPoly& c, const PolyVec& v) {
  for (size_t k = 0; k < z.size(); ++k) {
    z[k] = poly2_add(z[k], poly2_mul(c, v[k]));
  }
}

/* A basis for the span of the given mod-2 coordinate vectors.  The span
   must be a direct summand, which makes every nonzero diagonal entry of
   its Smith form a unit. */
std::vector<PolyVec> basis_of_span(const std::vector<PolyVec>& rows) {
  if (rows.empty()) return {};
  SnfResult snf = smith_normal_form(rows);
  PolyMat vinv = mat2_inverse(snf.v);
  std::vector<PolyVec> out;
  size_t bound = std::min(rows.size(), rows[0].size());
  for (size_t i = 0; i < bound; ++i) {
    const IntPoly& d = snf.d[i][i];
    if (poly_is_zero(d)) break;
    if (poly_degree(d) != 0) {
      throw WittError(ErrorCode::InternalError,
                      "span failed to be a direct summand");
    }
    out.push_back(vinv[i]);
  }
  return out;
}

/* The class of 2^{n-1}(b(x,x) + involve(b(x,x))) reduced mod 2, for one
   diagonal value of the Gram matrix.  Always integral. */
IntPoly diagonal_class(const DyadicPoly& d, Ring ring, int n) {
  IntPoly v = poly_add(d.num, poly_involve(d.num, ring));
  Int denom = pow2(d.denom_exp);
  IntPoly w(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Int c = v[i] * pow2(n - 1);
    if (c % denom != 0) {
      throw WittError(ErrorCode::InternalError,
                      "diagonal class failed to be integral");
    }
    w[i] = c / denom;
  }
  return poly2_reduce(w);
}

}  // namespace

/* --- Cyclotomic arithmetic --------------------------------------------- */

CyclotomicInt cyc_zero(int level) {
  require_level(level);
  CyclotomicInt c;
  c.level = level;
  c.coeffs.assign(static_cast<size_t>(1) << level, Int(0));
  return c;
}

CyclotomicInt cyc_one(int level) {
  CyclotomicInt c = cyc_zero(level);
  c.coeffs[0] = 1;
  return c;
}

CyclotomicInt cyc_root_power(int level, const Int& e) {
  CyclotomicInt c = cyc_zero(level);
  if (e < 0) {
    throw WittError(ErrorCode::BadDomain, "root exponent must be nonnegative");
  }
  Int half = pow2(level);
  Int r = e % (2 * half);
  if (r >= half) {
    c.coeffs[static_cast<size_t>(r - half)] = -1;
  } else {
    c.coeffs[static_cast<size_t>(r)] = 1;
  }
  return c;
}

CyclotomicInt cyc_add(const CyclotomicInt& a, const CyclotomicInt& b) {
  require_same_level(a, b);
  CyclotomicInt c = a;
  for (size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] += b.coeffs[i];
  return c;
}

CyclotomicInt cyc_mul(const CyclotomicInt& a, const CyclotomicInt& b) {
  require_same_level(a, b);
  CyclotomicInt c = cyc_zero(a.level);
  size_t n = c.coeffs.size();
  for (size_t i = 0; i < n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (b.coeffs[j] == 0) continue;
      Int term = a.coeffs[i] * b.coeffs[j];
      size_t k = i + j;
      if (k >= n) {
        c.coeffs[k - n] -= term;
      } else {
        c.coeffs[k] += term;
      }
    }
  }
  return c;
}

CyclotomicInt cyc_scale(const CyclotomicInt& a, const Int& c) {
  CyclotomicInt out = a;
  for (Int& x : out.coeffs) x *= c;
  return out;
}

bool cyc_eq(const CyclotomicInt& a, const CyclotomicInt& b) {
  return a.level == b.level && a.coeffs == b.coeffs;
}

/* --- Invariants over Z ------------------------------------------------- */

int rank_inv(const LinkingForm& m) {
  if (m.module.ring != Ring::Z) {
    throw WittError(ErrorCode::RingMismatch,
                    "rank invariant needs a form over Z");
  }
  int total = 0;
  for (const Piece& piece : m.module.pieces) total += piece.a;
  return total % 2;
}

int gauss_sum(const LinkingForm& m, int max_log2) {
  if (m.module.ring != Ring::Z) {
    throw WittError(ErrorCode::RingMismatch, "Gauss sum needs a form over Z");
  }
  int log2m = 0;
  for (const Piece& piece : m.module.pieces) log2m += piece.a;
  if (log2m > max_log2) {
    throw WittError(ErrorCode::ModuleTooLarge,
                    "module order exceeds the enumeration cap",
                    "log2 |M| = " + std::to_string(log2m));
  }

  int level = std::max(3, m.module.exponent + 1);
  CyclotomicInt sum = cyc_zero(level);
  Int half = pow2(level);
  Int period = 2 * half;

  size_t r = m.module.pieces.size();
  std::vector<Int> cap(r), coord(r, Int(0));
  for (size_t i = 0; i < r; ++i) cap[i] = pow2(m.module.pieces[i].a);

  while (true) {
    std::vector<IntPoly> coords(r);
    for (size_t i = 0; i < r; ++i) coords[i] = poly_const(coord[i]);
    ModElement x = elem_make(m.module, std::move(coords));
    DyadicPoly qv = dyadic_canonical(eval_q(m, x));
    if (qv.denom_exp > level) {
      throw WittError(ErrorCode::InternalError,
                      "q denominator exceeds the cyclotomic level");
    }
    Int u = qv.num.empty() ? Int(0) : qv.num[0];
    Int e = (u * pow2(level - qv.denom_exp)) % period;
    if (e < 0) e += period;
    if (e >= half) {
      sum.coeffs[static_cast<size_t>(e - half)] -= 1;
    } else {
      sum.coeffs[static_cast<size_t>(e)] += 1;
    }

    size_t pos = 0;
    while (pos < r) {
      coord[pos] += 1;
      if (coord[pos] < cap[pos]) break;
      coord[pos] = 0;
      ++pos;
    }
    if (pos == r) break;
  }

  for (int k = 0; k < 8; ++k) {
    if (cyc_eq(sum, gauss_candidate(level, log2m, k))) return k;
  }
  throw WittError(ErrorCode::NoCandidateMatch,
                  "the summed exponential matches no eighth root of unity; "
                  "the input form is inconsistent");
}

/* --- Quadratic forms over R/2R ----------------------------------------- */

QuadraticFormZ2 make_quadratic_z2(Ring ring, PolyMat lambda, PolyVec mu) {
  size_t r = lambda.size();
  if (mu.size() != r) {
    throw WittError(ErrorCode::BadDomain,
                    "lambda and mu sizes disagree");
  }
  for (PolyVec& row : lambda) {
    if (row.size() != r) {
      throw WittError(ErrorCode::BadDomain, "lambda must be square");
    }
    for (IntPoly& entry : row) entry = poly2_reduce(entry);
  }
  for (IntPoly& entry : mu) entry = poly2_reduce(entry);
  if (ring == Ring::Z) {
    for (const PolyVec& row : lambda) {
      for (const IntPoly& entry : row) {
        if (poly_degree(entry) > 0) {
          throw WittError(ErrorCode::RingMismatch,
                          "entries over Z must be constant");
        }
      }
    }
    for (const IntPoly& entry : mu) {
      if (poly_degree(entry) > 0) {
        throw WittError(ErrorCode::RingMismatch,
                        "entries over Z must be constant");
      }
    }
  }
  for (size_t i = 0; i < r; ++i) {
    if (!poly_is_zero(lambda[i][i])) {
      throw WittError(ErrorCode::SymmetryViolated,
                      "lambda must have zero diagonal");
    }
    for (size_t j = i + 1; j < r; ++j) {
      if (!poly_eq(lambda[i][j], lambda[j][i])) {
        throw WittError(ErrorCode::SymmetryViolated,
                        "lambda must be symmetric mod 2");
      }
    }
  }
  QuadraticFormZ2 f;
  f.ring = ring;
  f.lambda = std::move(lambda);
  f.mu = std::move(mu);
  return f;
}

bool quadratic_z2_eq(const QuadraticFormZ2& a, const QuadraticFormZ2& b) {
  if (a.ring != b.ring || a.lambda.size() != b.lambda.size()) return false;
  for (size_t i = 0; i < a.lambda.size(); ++i) {
    for (size_t j = 0; j < a.lambda.size(); ++j) {
      if (!poly_eq(a.lambda[i][j], b.lambda[i][j])) return false;
    }
    if (!poly_eq(a.mu[i], b.mu[i])) return false;
  }
  return true;
}

IntPoly quadratic_z2_lambda(const QuadraticFormZ2& f, const PolyVec& x,
                            const PolyVec& y) {
  check_coords(f, x);
  check_coords(f, y);
  IntPoly total;
  for (size_t i = 0; i < x.size(); ++i) {
    if (poly_is_zero(x[i])) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      total = poly2_add(
          total, poly2_mul(poly2_mul(x[i], y[j]), f.lambda[i][j]));
    }
  }
  return total;
}

IntPoly quadratic_z2_mu(const QuadraticFormZ2& f, const PolyVec& x) {
  check_coords(f, x);
  IntPoly total;
  for (size_t i = 0; i < x.size(); ++i) {
    total = poly2_add(total, poly2_mul(poly2_frobenius(x[i]), f.mu[i]));
    for (size_t j = i + 1; j < x.size(); ++j) {
      total = poly2_add(
          total, poly2_mul(poly2_mul(x[i], x[j]), f.lambda[i][j]));
    }
  }
  return total;
}

QuadraticFormZ2 quadratic_z2_change_basis(const QuadraticFormZ2& f,
                                          const PolyMat& u) {
  size_t r = f.lambda.size();
  if (u.size() != r) {
    throw WittError(ErrorCode::BadDomain, "basis matrix must be square");
  }
  for (const PolyVec& row : u) {
    if (row.size() != r) {
      throw WittError(ErrorCode::BadDomain, "basis matrix must be square");
    }
  }
  if (r > 0 && !mat2_is_unimodular(u)) {
    throw WittError(ErrorCode::BadDomain,
                    "basis change must be invertible mod 2");
  }
  std::vector<PolyVec> cols(r, PolyVec(r));
  for (size_t k = 0; k < r; ++k) {
    for (size_t i = 0; i < r; ++i) cols[k][i] = u[i][k];
  }
  PolyMat lambda(r, PolyVec(r));
  PolyVec mu(r);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) {
      lambda[i][j] = quadratic_z2_lambda(f, cols[i], cols[j]);
    }
    mu[i] = quadratic_z2_mu(f, cols[i]);
  }
  return make_quadratic_z2(f.ring, std::move(lambda), std::move(mu));
}

/* --- The correspondence with exponent-two linking forms ---------------- */

LinkingForm alpha_push(const QuadraticFormZ2& f) {
  size_t r = f.lambda.size();
  std::vector<Piece> pieces(r, Piece::cyclic(1));
  TorsionModule mod = make_module(std::move(pieces), f.ring);
  DyadicMat gram(r, DyadicVec(r));
  DyadicVec qvec(r);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) {
      gram[i][j] = make_dyadic(f.lambda[i][j], 1, Modulus::ModR, f.ring);
    }
    IntPoly twice = poly_add(f.mu[i], poly_involve(f.mu[i], f.ring));
    IntPoly half(twice.size());
    for (size_t k = 0; k < twice.size(); ++k) {
      if (twice[k] % 2 != 0) {
        throw WittError(ErrorCode::InternalError,
                        "symmetrized quadratic value must be even");
      }
      half[k] = twice[k] / 2;
    }
    qvec[i] = make_dyadic(std::move(half), 0, Modulus::ModOnePlusStar, f.ring);
  }
  return make_form(std::move(mod), 1, std::move(gram), std::move(qvec));
}

QuadraticFormZ2 alpha_pull(const LinkingForm& m) {
  if (m.epsilon != 1) {
    throw WittError(ErrorCode::Unsupported,
                    "only symmetric forms correspond to quadratic forms");
  }
  if (m.module.exponent > 1) {
    throw WittError(ErrorCode::BadDomain,
                    "the correspondence needs an exponent-two module");
  }
  size_t r = static_cast<size_t>(module_num_gens(m.module));
  for (size_t i = 0; i < r; ++i) {
    if (!dyadic_is_zero(dyadic_add(m.qvec[i], m.qvec[i]))) {
      throw WittError(ErrorCode::NotEvenType,
                      "quadratic values must satisfy 2 q = 0");
    }
  }
  PolyMat lambda(r, PolyVec(r));
  PolyVec mu(r);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) lambda[i][j] = tate_two(m.gram[i][j]);
    DyadicPoly q = dyadic_canonical(m.qvec[i]);
    if (q.denom_exp != 0) {
      throw WittError(ErrorCode::InternalError,
                      "even-type value failed to be integral");
    }
    mu[i] = q.num;
  }
  return make_quadratic_z2(m.module.ring, std::move(lambda), std::move(mu));
}

/* --- Arf invariant ----------------------------------------------------- */

IntPoly arf_invariant(const QuadraticFormZ2& f) {
  size_t rank = f.lambda.size();
  std::vector<PolyVec> basis;
  for (size_t i = 0; i < rank; ++i) {
    PolyVec unit(rank);
    unit[i] = poly_const(1);
    basis.push_back(std::move(unit));
  }

  IntPoly total;
  while (!basis.empty()) {
    const PolyVec e = basis[0];
    PolyMat row(1, PolyVec(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
      row[0][j] = quadratic_z2_lambda(f, e, basis[j]);
    }
    SolveResult sol = solve_linear_mod2(row, PolyVec{poly_const(1)},
                                        static_cast<int>(basis.size()));
    if (!sol.consistent) {
      throw WittError(ErrorCode::NotSymplectic,
                      "the pairing with the pivot vector is not unital; "
                      "lambda is not unimodular");
    }
    PolyVec fvec(rank);
    for (size_t j = 0; j < basis.size(); ++j) {
      vec2_accumulate(fvec, sol.particular[j], basis[j]);
    }
    total = poly2_add(total, poly2_mul(quadratic_z2_mu(f, e),
                                       quadratic_z2_mu(f, fvec)));

    std::vector<PolyVec> span;
    for (size_t j = 1; j < basis.size(); ++j) {
      PolyVec z = basis[j];
      vec2_accumulate(z, quadratic_z2_lambda(f, e, basis[j]), fvec);
      vec2_accumulate(z, quadratic_z2_lambda(f, fvec, basis[j]), e);
      span.push_back(std::move(z));
    }
    basis = basis_of_span(span);
  }
  return arf_reduce(total, Subring::Z2t);
}

/* --- Template builders ------------------------------------------------- */

LinkingForm P2_map(const IntPoly& p, Ring ring) {
  IntPoly p2 = poly2_reduce(p);
  if (ring == Ring::Z && poly_degree(p2) > 0) {
    throw WittError(ErrorCode::BadDomain,
                    "argument over Z must be constant");
  }
  if (ring == Ring::ZtMinus && has_odd_support(p2)) {
    throw WittError(ErrorCode::BadDomain,
                    "argument over Zt- must have even support");
  }
  return form_P(std::move(p2), poly_const(1), ring);
}

LinkingForm Q0_map(const IntPoly& a) {
  IntPoly a2 = poly2_reduce(a);
  bool ok = poly_coeff(a2, 0) == 0 && !has_odd_support(a2);
  if (!ok) {
    throw WittError(ErrorCode::BadDomain,
                    "argument must lie in t^2 Z_2[t^2]");
  }
  return form_P(shift_down_one(a2), poly_t_power(1), Ring::ZtMinus);
}

/* --- Characteristic elements ------------------------------------------- */

CharElements char_elements(const LinkingForm& m, int n) {
  if (m.epsilon != 1) {
    throw WittError(ErrorCode::Unsupported,
                    "characteristic elements need a symmetric form");
  }
  if (n < 1) {
    throw WittError(ErrorCode::BadDomain, "level must be at least one");
  }
  if (m.module.exponent > n) {
    throw WittError(ErrorCode::BadDomain,
                    "module exponent exceeds the level");
  }
  const TorsionModule& mod = m.module;
  std::vector<ModElement> gens = module_generators(mod);
  size_t r = gens.size();

  /* Split the diagonal class over the basis {[1], [t]} of the target;
     the component maps are the inverse of coefficientwise squaring, so
     they fall out of the even/odd decomposition. */
  PolyVec phi0(r), phi1(r);
  for (size_t k = 0; k < r; ++k) {
    IntPoly w = diagonal_class(eval_b(m, gens[k], gens[k]), mod.ring, n);
    auto parts = evodd_decompose(w);
    if (mod.ring == Ring::ZtPlus) {
      phi0[k] = parts.first;
      phi1[k] = parts.second;
    } else {
      if (!poly_is_zero(parts.second)) {
        throw WittError(ErrorCode::InternalError,
                        "diagonal class escapes the fixed subring");
      }
      phi0[k] = parts.first;
    }
  }

  /* Basis of the two-torsion submodule: one element per piece. */
  std::vector<ModElement> h;
  size_t genpos = 0;
  for (const Piece& piece : mod.pieces) {
    if (piece.kind == Piece::Kind::Cyclic) {
      h.push_back(elem_scale(mod, poly_const(pow2(piece.a - 1)),
                             gens[genpos]));
      genpos += 1;
    } else {
      h.push_back(gens[genpos + 1]);
      genpos += 2;
    }
  }

  PolyMat pairings(r, PolyVec(h.size()));
  for (size_t k = 0; k < r; ++k) {
    for (size_t j = 0; j < h.size(); ++j) {
      pairings[k][j] = tate_two(eval_b(m, h[j], gens[k]));
    }
  }

  auto solve_v = [&](const PolyVec& rhs) {
    SolveResult sol =
        solve_linear_mod2(pairings, rhs, static_cast<int>(h.size()));
    if (!sol.consistent) {
      throw WittError(ErrorCode::InternalError,
                      "characteristic system is inconsistent");
    }
    for (const PolyVec& hom : sol.homogeneous) {
      for (const IntPoly& c : hom) {
        if (!poly_is_zero(poly2_reduce(c))) {
          throw WittError(ErrorCode::InternalError,
                          "characteristic system is underdetermined");
        }
      }
    }
    ModElement v = elem_zero(mod);
    for (size_t j = 0; j < h.size(); ++j) {
      v = elem_add(mod, v, elem_scale(mod, sol.particular[j], h[j]));
    }
    return v;
  };

  CharElements ce;
  ce.level = n;
  ce.v0 = solve_v(phi0);
  ce.v1 = mod.ring == Ring::ZtPlus ? solve_v(phi1) : elem_zero(mod);

  auto verify = [&](const ModElement& v, const PolyVec& phi) {
    if (!elem_is_zero(mod, elem_scale(mod, poly_const(2), v))) {
      throw WittError(ErrorCode::InternalError,
                      "characteristic element is not two-torsion");
    }
    for (size_t k = 0; k < r; ++k) {
      IntPoly lhs = tate_two(eval_b(m, v, gens[k]));
      if (!poly_eq(lhs, poly2_reduce(phi[k]))) {
        throw WittError(ErrorCode::InternalError,
                        "defining equations failed on a generator");
      }
    }
  };
  verify(ce.v0, phi0);
  verify(ce.v1, phi1);
  return ce;
}

/* --- Q and B ----------------------------------------------------------- */

DyadicPoly Q_inv_raw(const LinkingForm& m, int n, int i) {
  if (i != 0 && i != 1) {
    throw WittError(ErrorCode::BadDomain, "component index must be 0 or 1");
  }
  CharElements ce = char_elements(m, n);
  return dyadic_canonical(eval_q(m, i == 0 ? ce.v0 : ce.v1));
}

TateClass Q_inv(const LinkingForm& m, int n, int i) {
  if (i != 0 && i != 1) {
    throw WittError(ErrorCode::BadDomain, "component index must be 0 or 1");
  }
  CharElements ce = char_elements(m, n);
  const ModElement& v = i == 0 ? ce.v0 : ce.v1;
  DyadicPoly val = dyadic_canonical(eval_q(m, v));
  /* Over Zt- the odd-exponent part of a value is exact, not mod 2, so it
     must be inspected before the mod-2 coercion below can be trusted. */
  bool odd = m.module.ring == Ring::ZtMinus && has_odd_support(val.num);
  if (n >= 2) {
    if (!dyadic_is_zero(eval_b(m, v, v)) || val.denom_exp != 0) {
      throw WittError(ErrorCode::InternalError,
                      "value must be integral at levels above one");
    }
    if (odd) {
      throw WittError(ErrorCode::NotSelfConjugate,
                      "value carries exact odd-exponent terms outside the "
                      "self-conjugate subring");
    }
  } else if (val.denom_exp != 0 || odd) {
    throw WittError(ErrorCode::NotReducedClass,
                    "value lies outside the fixed subring; "
                    "the class is not reduced");
  }
  return make_tate(poly2_reduce(val.num), m.module.ring);
}

BValue B_inv(const LinkingForm& m) {
  if (m.module.ring != Ring::ZtPlus) {
    throw WittError(ErrorCode::RingMismatch,
                    "B is defined over Z[t] with the trivial involution");
  }
  if (m.epsilon != 1) {
    throw WittError(ErrorCode::Unsupported, "B needs a symmetric form");
  }
  if (m.module.exponent > 1) {
    throw WittError(ErrorCode::BadDomain, "B needs an exponent-two form");
  }
  LinkingForm at_zero = evaluate_at(m, 0);
  if (rank_inv(at_zero) != 0 || gauss_sum(at_zero) != 0) {
    throw WittError(ErrorCode::NotReducedClass,
                    "the evaluation at zero has nontrivial class");
  }
  CharElements ce = char_elements(m, 1);
  DyadicPoly q0 = eval_q(m, ce.v0);
  DyadicPoly q1 = eval_q(m, ce.v1);
  if (q0.denom_exp != 0 || q1.denom_exp != 0) {
    throw WittError(ErrorCode::InternalError,
                    "reduced class produced a non-integral value");
  }
  IntPoly r0 = poly2_reduce(q0.num);
  IntPoly r1 = poly2_reduce(q1.num);
  BValue out;
  out.b1 = poly2_add(r0, poly2_mul(poly_t_power(1), r1));
  auto parts0 = evodd_decompose(r0);
  auto parts1 = evodd_decompose(r1);
  out.b2 = poly2_add(
      poly2_frobenius(poly2_mul(poly_t_power(1), parts1.second)),
      poly2_mul(poly_t_power(1), poly2_frobenius(parts0.second)));
  if (poly_coeff(out.b1, 0) != 0 || poly_coeff(out.b2, 0) != 0) {
    throw WittError(ErrorCode::InternalError,
                    "B escaped the augmentation ideal");
  }
  return out;
}

}  // namespace wittlink
