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

#include "wittlink/torsion.hpp"

#include <algorithm>
#include <utility>

namespace wittlink {

Piece Piece::cyclic(int a) {
  Piece p;
  p.kind = Kind::Cyclic;
  p.a = a;
  return p;
}

Piece Piece::mp(IntPoly poly) {
  Piece p;
  p.kind = Kind::Mp;
  p.p = std::move(poly);
  return p;
}

namespace {

Int piece_window(const Piece& pc) {
  return pc.kind == Piece::Kind::Mp ? Int(4) : pow2(pc.a);
}

int piece_exponent(const Piece& pc) {
  return pc.kind == Piece::Kind::Mp ? 2 : pc.a;
}

int piece_gen_count(const Piece& pc) {
  return pc.kind == Piece::Kind::Mp ? 2 : 1;
}

}  // namespace

TorsionModule make_module(std::vector<Piece> pieces, Ring ring) {
  TorsionModule m;
  m.ring = ring;
  for (Piece& pc : pieces) {
    if (pc.kind == Piece::Kind::Cyclic) {
      if (pc.a < 1) {
        throw WittError(ErrorCode::BadDomain, "cyclic exponent must be >= 1");
      }
    } else {
      if (ring == Ring::Z) {
        throw WittError(ErrorCode::BadRing,
                        "Mp pieces require a polynomial ring");
      }
      pc.p = poly2_reduce(pc.p);
      if (poly_is_zero(pc.p)) {
        throw WittError(ErrorCode::NotLengthOne,
                        "Mp parameter vanishes mod 2, the piece is not a "
                        "length-one exponent-four module");
      }
    }
    m.exponent = std::max(m.exponent, piece_exponent(pc));
  }
  m.pieces = std::move(pieces);
  return m;
}

bool module_eq(const TorsionModule& a, const TorsionModule& b) {
  if (a.ring != b.ring || a.pieces.size() != b.pieces.size()) return false;
  for (size_t i = 0; i < a.pieces.size(); ++i) {
    const Piece& x = a.pieces[i];
    const Piece& y = b.pieces[i];
    if (x.kind != y.kind) return false;
    if (x.kind == Piece::Kind::Cyclic && x.a != y.a) return false;
    if (x.kind == Piece::Kind::Mp && !poly_eq(x.p, y.p)) return false;
  }
  return true;
}

int module_num_gens(const TorsionModule& m) {
  int n = 0;
  for (const Piece& pc : m.pieces) n += piece_gen_count(pc);
  return n;
}

std::vector<ModElement> module_generators(const TorsionModule& m) {
  std::vector<ModElement> gens;
  for (size_t i = 0; i < m.pieces.size(); ++i) {
    const Piece& pc = m.pieces[i];
    if (pc.kind == Piece::Kind::Cyclic) {
      ModElement g;
      g.coords.assign(m.pieces.size(), {});
      g.coords[i] = poly_from({1});
      gens.push_back(std::move(g));
    } else {
      ModElement phi;
      phi.coords.assign(m.pieces.size(), {});
      phi.coords[i] = pc.p;
      gens.push_back(std::move(phi));
      ModElement tau;
      tau.coords.assign(m.pieces.size(), {});
      tau.coords[i] = poly_from({2});
      gens.push_back(std::move(tau));
    }
  }
  return gens;
}

PolyMat presentation_rows(const TorsionModule& m) {
  int g = module_num_gens(m);
  PolyMat rows;
  int idx = 0;
  for (const Piece& pc : m.pieces) {
    if (pc.kind == Piece::Kind::Cyclic) {
      PolyVec row(g);
      row[idx] = poly_const(pow2(pc.a));
      rows.push_back(std::move(row));
      idx += 1;
    } else {
      PolyVec r1(g);
      r1[idx] = poly_from({2});
      r1[idx + 1] = poly_neg(pc.p);
      rows.push_back(std::move(r1));
      PolyVec r2(g);
      r2[idx + 1] = poly_from({2});
      rows.push_back(std::move(r2));
      idx += 2;
    }
  }
  return rows;
}

ModElement elem_make(const TorsionModule& m, std::vector<IntPoly> coords) {
  if (coords.size() != m.pieces.size()) {
    throw WittError(ErrorCode::BadDomain,
                    "coordinate count does not match module pieces");
  }
  ModElement x;
  x.coords.resize(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) {
    const Piece& pc = m.pieces[i];
    IntPoly c = poly_mod_coeffs(coords[i], piece_window(pc));
    if (m.ring == Ring::Z && poly_degree(c) > 0) {
      throw WittError(ErrorCode::BadRing,
                      "nonconstant coordinate over the integers");
    }
    if (pc.kind == Piece::Kind::Mp) {
      IntPoly rem;
      poly2_divmod(poly2_reduce(c), pc.p, &rem);
      if (!poly_is_zero(rem)) {
        throw WittError(ErrorCode::BadDomain,
                        "Mp coordinate is not in the submodule <p, 2>");
      }
    }
    x.coords[i] = std::move(c);
  }
  return x;
}

ModElement elem_zero(const TorsionModule& m) {
  ModElement x;
  x.coords.assign(m.pieces.size(), {});
  return x;
}

bool elem_eq(const TorsionModule& m, const ModElement& x, const ModElement& y) {
  (void)m;
  if (x.coords.size() != y.coords.size()) return false;
  for (size_t i = 0; i < x.coords.size(); ++i) {
    if (!poly_eq(x.coords[i], y.coords[i])) return false;
  }
  return true;
}

bool elem_is_zero(const TorsionModule& m, const ModElement& x) {
  return elem_eq(m, x, elem_zero(m));
}

ModElement elem_add(const TorsionModule& m, const ModElement& x,
                    const ModElement& y) {
  std::vector<IntPoly> coords(x.coords.size());
  for (size_t i = 0; i < x.coords.size(); ++i) {
    coords[i] = poly_add(x.coords[i], y.coords[i]);
  }
  return elem_make(m, std::move(coords));
}

ModElement elem_sub(const TorsionModule& m, const ModElement& x,
                    const ModElement& y) {
  return elem_add(m, x, elem_neg(m, y));
}

ModElement elem_neg(const TorsionModule& m, const ModElement& x) {
  std::vector<IntPoly> coords(x.coords.size());
  for (size_t i = 0; i < x.coords.size(); ++i) coords[i] = poly_neg(x.coords[i]);
  return elem_make(m, std::move(coords));
}

ModElement elem_scale(const TorsionModule& m, const IntPoly& r,
                      const ModElement& x) {
  if (m.ring == Ring::Z && poly_degree(r) > 0) {
    throw WittError(ErrorCode::BadRing, "nonconstant scalar over the integers");
  }
  std::vector<IntPoly> coords(x.coords.size());
  for (size_t i = 0; i < x.coords.size(); ++i) {
    coords[i] = poly_mul(r, x.coords[i]);
  }
  return elem_make(m, std::move(coords));
}

PolyVec elem_gen_coeffs(const TorsionModule& m, const ModElement& x) {
  PolyVec coeffs;
  for (size_t i = 0; i < m.pieces.size(); ++i) {
    const Piece& pc = m.pieces[i];
    if (pc.kind == Piece::Kind::Cyclic) {
      coeffs.push_back(x.coords[i]);
    } else {
      IntPoly a = poly2_divmod(poly2_reduce(x.coords[i]), pc.p, nullptr);
      IntPoly rest = poly_sub(x.coords[i], poly_mul(a, pc.p));
      for (Int& c : rest) {
        if (c % 2 != 0) {
          throw WittError(ErrorCode::InternalError,
                          "Mp coordinate failed parity split");
        }
        c /= 2;
      }
      coeffs.push_back(std::move(a));
      coeffs.push_back(poly2_reduce(rest));
    }
  }
  return coeffs;
}

ModElement elem_from_gen_coeffs(const TorsionModule& m, const PolyVec& coeffs) {
  std::vector<IntPoly> coords;
  size_t idx = 0;
  for (const Piece& pc : m.pieces) {
    if (pc.kind == Piece::Kind::Cyclic) {
      coords.push_back(idx < coeffs.size() ? coeffs[idx] : IntPoly{});
      idx += 1;
    } else {
      IntPoly a = idx < coeffs.size() ? coeffs[idx] : IntPoly{};
      IntPoly b = idx + 1 < coeffs.size() ? coeffs[idx + 1] : IntPoly{};
      coords.push_back(
          poly_add(poly_mul(a, pc.p), poly_scale(b, 2)));
      idx += 2;
    }
  }
  return elem_make(m, std::move(coords));
}

Submodule submodule_make(const TorsionModule& m,
                         std::vector<ModElement> generators) {
  for (const ModElement& g : generators) {
    if (g.coords.size() != m.pieces.size()) {
      throw WittError(ErrorCode::BadDomain,
                      "generator does not belong to the ambient module");
    }
  }
  Submodule s;
  s.generators = std::move(generators);
  return s;
}

Submodule submodule_sum(const TorsionModule& m, const Submodule& a,
                        const Submodule& b) {
  std::vector<ModElement> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  Submodule s = submodule_make(m, std::move(gens));
  s.generators = reduced_generators(m, s);
  return s;
}

namespace {

/* Columns: one per submodule generator, then one per relation row. */
PolyMat membership_matrix(const TorsionModule& m, const Submodule& s,
                          const PolyMat& rel) {
  int g = module_num_gens(m);
  size_t k = s.generators.size();
  PolyMat a(g, PolyVec(k + rel.size()));
  for (size_t j = 0; j < k; ++j) {
    PolyVec v = elem_gen_coeffs(m, s.generators[j]);
    for (int i = 0; i < g; ++i) a[i][j] = v[i];
  }
  for (size_t j = 0; j < rel.size(); ++j) {
    for (int i = 0; i < g; ++i) a[i][k + j] = rel[j][i];
  }
  return a;
}

}  // namespace

std::optional<PolyVec> membership(const TorsionModule& m, const Submodule& s,
                                  const ModElement& x) {
  if (m.pieces.empty()) {
    return PolyVec(s.generators.size());
  }
  PolyMat rel = presentation_rows(m);
  PolyMat a = membership_matrix(m, s, rel);
  PolyVec b = elem_gen_coeffs(m, x);
  SolveResult r =
      solve_linear_pow2(a, b, m.exponent, static_cast<int>(a[0].size()));
  if (!r.consistent) return std::nullopt;
  PolyVec cert(r.particular.begin(),
               r.particular.begin() + s.generators.size());
  return cert;
}

bool submodule_contains(const TorsionModule& m, const Submodule& s,
                        const ModElement& x) {
  return membership(m, s, x).has_value();
}

bool submodule_eq(const TorsionModule& m, const Submodule& a,
                  const Submodule& b) {
  for (const ModElement& g : a.generators) {
    if (!submodule_contains(m, b, g)) return false;
  }
  for (const ModElement& g : b.generators) {
    if (!submodule_contains(m, a, g)) return false;
  }
  return true;
}

std::vector<ModElement> reduced_generators(const TorsionModule& m,
                                           const Submodule& s) {
  std::vector<ModElement> kept;
  for (const ModElement& g : s.generators) {
    if (!elem_is_zero(m, g)) kept.push_back(g);
  }
  for (size_t i = 0; i < kept.size();) {
    std::vector<ModElement> others;
    for (size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    Submodule rest;
    rest.generators = std::move(others);
    if (submodule_contains(m, rest, kept[i])) {
      kept.erase(kept.begin() + i);
    } else {
      ++i;
    }
  }
  return kept;
}

Submodule closure(const TorsionModule& m, const Submodule& s) {
  if (m.pieces.empty()) return s;
  int n = m.exponent;
  int g = module_num_gens(m);
  size_t k = s.generators.size();
  PolyMat rel = presentation_rows(m);
  std::vector<PolyVec> svecs(k);
  for (size_t j = 0; j < k; ++j) svecs[j] = elem_gen_coeffs(m, s.generators[j]);

  /* Universal odd denominator: the product over the exponent layers of
     M/S of the nonzero invariant factors of the layer relation matrix. */
  IntPoly d = poly_from({1});
  for (int level = 0; level < n; ++level) {
    size_t cols = static_cast<size_t>(2 * g) + k + rel.size();
    PolyMat a(g, PolyVec(cols));
    for (int i = 0; i < g; ++i) {
      a[i][i] = poly_const(pow2(level));
      a[i][g + i] = poly_const(pow2(level + 1));
    }
    for (size_t j = 0; j < k; ++j) {
      for (int i = 0; i < g; ++i) a[i][2 * g + j] = svecs[j][i];
    }
    for (size_t j = 0; j < rel.size(); ++j) {
      for (int i = 0; i < g; ++i) a[i][2 * g + k + j] = rel[j][i];
    }
    SolveResult r =
        solve_linear_pow2(a, PolyVec(g), n, static_cast<int>(cols));
    PolyMat layer_rel;
    for (const PolyVec& h : r.homogeneous) {
      PolyVec row(g);
      bool nonzero = false;
      for (int i = 0; i < g; ++i) {
        row[i] = poly2_reduce(h[i]);
        nonzero = nonzero || !poly_is_zero(row[i]);
      }
      if (nonzero) layer_rel.push_back(std::move(row));
    }
    if (layer_rel.empty()) continue;
    SnfResult snf = smith_normal_form(layer_rel);
    size_t limit = std::min(layer_rel.size(), static_cast<size_t>(g));
    for (size_t i = 0; i < limit; ++i) {
      /* The product must be taken with exact integer coefficients: the
         layer factors act one after the other, and reducing the product
         mod 2 would change the composite action by an even multiple. */
      if (!poly_is_zero(snf.d[i][i])) {
        d = poly_mod_coeffs(poly_mul(d, snf.d[i][i]), pow2(n));
      }
    }
  }

  /* Solve d*y in S: the solution set is the closure. */
  size_t cols = static_cast<size_t>(g) + k + rel.size();
  PolyMat a(g, PolyVec(cols));
  for (int i = 0; i < g; ++i) a[i][i] = d;
  for (size_t j = 0; j < k; ++j) {
    for (int i = 0; i < g; ++i) a[i][g + j] = svecs[j][i];
  }
  for (size_t j = 0; j < rel.size(); ++j) {
    for (int i = 0; i < g; ++i) a[i][g + k + j] = rel[j][i];
  }
  SolveResult r = solve_linear_pow2(a, PolyVec(g), n, static_cast<int>(cols));
  std::vector<ModElement> gens;
  for (const PolyVec& h : r.homogeneous) {
    PolyVec y(h.begin(), h.begin() + g);
    ModElement e = elem_from_gen_coeffs(m, y);
    if (!elem_is_zero(m, e)) gens.push_back(std::move(e));
  }
  Submodule out;
  out.generators = gens;
  out.generators = reduced_generators(m, out);
  return out;
}

/* --- Presentations and the exponent-four structure theorem ------------ */

namespace {

/* Membership of a coefficient vector in rowspan(rel) mod 4. */
bool vec_in_rowspan4(const PolyVec& v, const PolyMat& rel, int g) {
  PolyMat a(g, PolyVec(rel.size()));
  for (size_t j = 0; j < rel.size(); ++j) {
    for (int i = 0; i < g; ++i) a[i][j] = rel[j][i];
  }
  SolveResult r =
      solve_linear_pow2(a, v, 2, static_cast<int>(rel.size()));
  return r.consistent;
}

/* Solve sum_j c_j basis_j = target modulo rowspan(rel), mod 4; returns the
   c-part.  Throws if inconsistent. */
PolyVec express_over(const std::vector<PolyVec>& basis, const PolyVec& target,
                     const PolyMat& rel, int g, const char* what) {
  PolyMat a(g, PolyVec(basis.size() + rel.size()));
  for (size_t j = 0; j < basis.size(); ++j) {
    for (int i = 0; i < g; ++i) a[i][j] = basis[j][i];
  }
  for (size_t j = 0; j < rel.size(); ++j) {
    for (int i = 0; i < g; ++i) a[i][basis.size() + j] = rel[j][i];
  }
  SolveResult r = solve_linear_pow2(a, target, 2,
                                    static_cast<int>(basis.size() + rel.size()));
  if (!r.consistent) {
    throw WittError(ErrorCode::InternalError, what);
  }
  return PolyVec(r.particular.begin(), r.particular.begin() + basis.size());
}

/* Basis extraction for a module generated by gens with the given mod-2
   relation rows: returns the subset of transformed generators that are
   free, where new generator j is sum_i Vinv[j][i] gens_i.  A nonunit
   nonzero invariant factor means torsion. */
struct BasisResult {
  std::vector<PolyVec> basis;  // coefficient vectors mod 4
  bool torsion_free = true;
};

BasisResult basis_from_relations(const std::vector<PolyVec>& gens,
                                 PolyMat rel_rows, int g) {
  BasisResult out;
  size_t mcount = gens.size();
  if (mcount == 0) return out;
  if (rel_rows.empty()) {
    out.basis = gens;
    return out;
  }
  SnfResult snf = smith_normal_form(rel_rows);
  PolyMat vinv = mat2_inverse(snf.v);
  size_t rows = rel_rows.size();
  for (size_t j = 0; j < mcount; ++j) {
    IntPoly dj = (j < rows && j < mcount) ? snf.d[j][j] : IntPoly{};
    int deg = poly_degree(dj);
    if (deg > 0) {
      out.torsion_free = false;
      return out;
    }
    if (deg == 0) continue;  // unit: the transformed generator is zero
    PolyVec vec(g);
    for (size_t i = 0; i < mcount; ++i) {
      if (poly_is_zero(vinv[j][i])) continue;
      for (int c = 0; c < g; ++c) {
        vec[c] = poly_add(vec[c], poly_mul(vinv[j][i], gens[i][c]));
      }
    }
    for (IntPoly& p : vec) p = poly_mod_coeffs(p, 4);
    out.basis.push_back(std::move(vec));
  }
  return out;
}

}  // namespace

PresentedModule present_module(int num_gens, PolyMat relations, Ring ring) {
  PresentedModule pm;
  pm.num_gens = num_gens;
  for (PolyVec& row : relations) {
    if (static_cast<int>(row.size()) != num_gens) {
      throw WittError(ErrorCode::BadDomain, "relation row width mismatch");
    }
    bool nonzero = false;
    for (IntPoly& e : row) {
      e = poly_mod_coeffs(e, 4);
      nonzero = nonzero || !poly_is_zero(e);
    }
    if (nonzero) pm.relations.push_back(std::move(row));
  }
  const PolyMat& rel = pm.relations;
  int g = num_gens;

  if (g == 0) {
    pm.module = make_module({}, ring);
    return pm;
  }

  /* Elements x with 2x = 0: generators of the two-torsion submodule, and,
     read mod 2, the relation rows of M / (two-torsion). */
  std::vector<PolyVec> tors_gens;
  PolyMat quot_rel;
  {
    PolyMat a(g, PolyVec(g + rel.size()));
    for (int i = 0; i < g; ++i) a[i][i] = poly_from({2});
    for (size_t j = 0; j < rel.size(); ++j) {
      for (int i = 0; i < g; ++i) a[i][g + j] = rel[j][i];
    }
    SolveResult r = solve_linear_pow2(a, PolyVec(g), 2,
                                      static_cast<int>(g + rel.size()));
    for (const PolyVec& h : r.homogeneous) {
      PolyVec x(h.begin(), h.begin() + g);
      PolyVec x2(g);
      bool nonzero2 = false;
      for (int i = 0; i < g; ++i) {
        x2[i] = poly2_reduce(x[i]);
        nonzero2 = nonzero2 || !poly_is_zero(x2[i]);
      }
      if (nonzero2) quot_rel.push_back(std::move(x2));
      if (!vec_in_rowspan4(x, rel, g)) tors_gens.push_back(std::move(x));
    }
  }

  /* Basis of M / (two-torsion). */
  std::vector<PolyVec> unit_gens(g, PolyVec(g));
  for (int i = 0; i < g; ++i) unit_gens[i][i] = poly_from({1});
  BasisResult quot_basis = basis_from_relations(unit_gens, quot_rel, g);
  if (!quot_basis.torsion_free) {
    throw WittError(ErrorCode::NotLengthOne,
                    "quotient by the two-torsion submodule has torsion");
  }

  /* Basis of the two-torsion submodule. */
  PolyMat tors_rel;
  {
    PolyMat a(g, PolyVec(tors_gens.size() + rel.size()));
    for (size_t j = 0; j < tors_gens.size(); ++j) {
      for (int i = 0; i < g; ++i) a[i][j] = tors_gens[j][i];
    }
    for (size_t j = 0; j < rel.size(); ++j) {
      for (int i = 0; i < g; ++i) a[i][tors_gens.size() + j] = rel[j][i];
    }
    SolveResult r =
        solve_linear_pow2(a, PolyVec(g), 2,
                          static_cast<int>(tors_gens.size() + rel.size()));
    for (const PolyVec& h : r.homogeneous) {
      PolyVec c(tors_gens.size());
      bool nonzero = false;
      for (size_t i = 0; i < tors_gens.size(); ++i) {
        c[i] = poly2_reduce(h[i]);
        nonzero = nonzero || !poly_is_zero(c[i]);
      }
      if (nonzero) tors_rel.push_back(std::move(c));
    }
  }
  BasisResult tors_basis = basis_from_relations(tors_gens, tors_rel, g);
  if (!tors_basis.torsion_free) {
    throw WittError(ErrorCode::NotLengthOne,
                    "two-torsion submodule has torsion");
  }

  const std::vector<PolyVec>& phis = quot_basis.basis;
  const std::vector<PolyVec>& taus = tors_basis.basis;

  /* Doubling map from the quotient basis into the two-torsion basis. */
  size_t sphi = phis.size();
  size_t stau = taus.size();
  PolyMat tmat(stau, PolyVec(sphi));
  for (size_t j = 0; j < sphi; ++j) {
    PolyVec two_phi(g);
    for (int i = 0; i < g; ++i) {
      two_phi[i] = poly_mod_coeffs(poly_scale(phis[j][i], 2), 4);
    }
    PolyVec c = express_over(taus, two_phi, rel, g,
                             "doubled basis vector escapes the two-torsion");
    for (size_t i = 0; i < stau; ++i) tmat[i][j] = poly2_reduce(c[i]);
  }

  SnfResult tsnf = smith_normal_form(tmat);
  PolyMat uinv =
      stau ? mat2_inverse(tsnf.u) : PolyMat{};

  auto combine = [&](const std::vector<PolyVec>& base, const PolyMat& coeff,
                     size_t col) {
    PolyVec vec(g);
    for (size_t i = 0; i < base.size(); ++i) {
      if (poly_is_zero(coeff[i][col])) continue;
      for (int c = 0; c < g; ++c) {
        vec[c] = poly_add(vec[c], poly_mul(coeff[i][col], base[i][c]));
      }
    }
    for (IntPoly& p : vec) p = poly_mod_coeffs(p, 4);
    return vec;
  };

  std::vector<Piece> pieces;
  std::vector<PolyVec> gen_vecs;
  std::vector<bool> tau_used(stau, false);
  size_t limit = std::min(sphi, stau);
  for (size_t l = 0; l < sphi; ++l) {
    PolyVec phi_vec = combine(phis, tsnf.v, l);
    IntPoly dl = (l < limit) ? tsnf.d[l][l] : IntPoly{};
    if (!poly_is_zero(dl)) {
      tau_used[l] = true;
      PolyVec tau_vec = combine(taus, uinv, l);
      if (ring == Ring::Z) {
        pieces.push_back(Piece::cyclic(2));
        gen_vecs.push_back(std::move(phi_vec));
      } else {
        pieces.push_back(Piece::mp(dl));
        gen_vecs.push_back(std::move(phi_vec));
        gen_vecs.push_back(std::move(tau_vec));
      }
    } else {
      pieces.push_back(Piece::cyclic(1));
      gen_vecs.push_back(std::move(phi_vec));
    }
  }
  for (size_t i = 0; i < stau; ++i) {
    if (tau_used[i]) continue;
    pieces.push_back(Piece::cyclic(1));
    gen_vecs.push_back(combine(taus, uinv, i));
  }

  pm.module = make_module(std::move(pieces), ring);
  pm.gen_vecs = std::move(gen_vecs);
  return pm;
}

ModElement presented_to_module(const PresentedModule& pm, const PolyVec& coeffs) {
  int g = pm.num_gens;
  if (module_num_gens(pm.module) == 0) {
    return elem_zero(pm.module);
  }
  PolyVec c = express_over(pm.gen_vecs, coeffs, pm.relations, g,
                           "coefficient vector is not generated");
  return elem_from_gen_coeffs(pm.module, c);
}

PolyVec presented_from_module(const PresentedModule& pm, const ModElement& x) {
  PolyVec gc = elem_gen_coeffs(pm.module, x);
  PolyVec out(pm.num_gens);
  for (size_t j = 0; j < pm.gen_vecs.size(); ++j) {
    for (int i = 0; i < pm.num_gens; ++i) {
      out[i] = poly_add(out[i], poly_mul(gc[j], pm.gen_vecs[j][i]));
    }
  }
  for (IntPoly& p : out) p = poly_mod_coeffs(p, 4);
  return out;
}

PresentedModule structure_decompose(const TorsionModule& m) {
  if (m.ring == Ring::Z) {
    throw WittError(ErrorCode::BadRing,
                    "structure decomposition requires a polynomial ring");
  }
  if (m.exponent > 2) {
    throw WittError(ErrorCode::ExponentTooHigh,
                    "structure decomposition requires exponent at most four");
  }
  return present_module(module_num_gens(m), presentation_rows(m), m.ring);
}

QuotientData quotient_presentation(const TorsionModule& m, const Submodule& s,
                                   const Submodule& t) {
  for (const ModElement& g : s.generators) {
    if (!submodule_contains(m, t, g)) {
      throw WittError(ErrorCode::NotASubmodule,
                      "first submodule is not contained in the second");
    }
  }
  QuotientData qd;
  qd.ambient = m;
  qd.t_generators = reduced_generators(m, t);
  const std::vector<ModElement>& tg = qd.t_generators;
  size_t kt = tg.size();

  for (const ModElement& g : tg) {
    ModElement four = elem_scale(m, poly_const(4), g);
    if (!submodule_contains(m, s, four)) {
      throw WittError(ErrorCode::ExponentTooHigh,
                      "quotient has exponent above four");
    }
  }

  if (m.pieces.empty() || kt == 0) {
    qd.pres = present_module(static_cast<int>(kt), {}, m.ring);
    /* An empty generator list still needs the collapse relations. */
    if (kt != 0) {
      throw WittError(ErrorCode::InternalError, "unreachable");
    }
    return qd;
  }

  int n = m.exponent;
  int g = module_num_gens(m);
  PolyMat rel = presentation_rows(m);
  size_t ks = s.generators.size();
  size_t cols = kt + ks + rel.size();
  PolyMat a(g, PolyVec(cols));
  for (size_t j = 0; j < kt; ++j) {
    PolyVec v = elem_gen_coeffs(m, tg[j]);
    for (int i = 0; i < g; ++i) a[i][j] = v[i];
  }
  for (size_t j = 0; j < ks; ++j) {
    PolyVec v = elem_gen_coeffs(m, s.generators[j]);
    for (int i = 0; i < g; ++i) a[i][kt + j] = v[i];
  }
  for (size_t j = 0; j < rel.size(); ++j) {
    for (int i = 0; i < g; ++i) a[i][kt + ks + j] = rel[j][i];
  }
  SolveResult r = solve_linear_pow2(a, PolyVec(g), n, static_cast<int>(cols));
  PolyMat qrel;
  for (const PolyVec& h : r.homogeneous) {
    PolyVec row(kt);
    bool nonzero = false;
    for (size_t i = 0; i < kt; ++i) {
      row[i] = poly_mod_coeffs(h[i], 4);
      nonzero = nonzero || !poly_is_zero(row[i]);
    }
    if (nonzero) qrel.push_back(std::move(row));
  }
  if (n == 1) {
    /* The mod-2 solve cannot express the collapse relations 2*e_i, which
       hold in the quotient because the ambient module has exponent two. */
    for (size_t i = 0; i < kt; ++i) {
      PolyVec row(kt);
      row[i] = poly_const(2);
      qrel.push_back(std::move(row));
    }
  }
  try {
    qd.pres = present_module(static_cast<int>(kt), std::move(qrel), m.ring);
  } catch (const WittError& e) {
    if (e.code() == ErrorCode::NotLengthOne) {
      throw WittError(ErrorCode::QuotientNotLengthOne,
                      "quotient fails the length-one criterion; the "
                      "denominator submodule is not closed");
    }
    throw;
  }
  return qd;
}

ModElement quotient_project(const QuotientData& qd, const ModElement& x) {
  Submodule t;
  t.generators = qd.t_generators;
  std::optional<PolyVec> cert = membership(qd.ambient, t, x);
  if (!cert) {
    throw WittError(ErrorCode::BadDomain,
                    "element is not in the numerator submodule");
  }
  PolyVec c = *cert;
  for (IntPoly& p : c) p = poly_mod_coeffs(p, 4);
  return presented_to_module(qd.pres, c);
}

ModElement quotient_section(const QuotientData& qd, const ModElement& y) {
  PolyVec c = presented_from_module(qd.pres, y);
  ModElement out = elem_zero(qd.ambient);
  for (size_t j = 0; j < qd.t_generators.size(); ++j) {
    out = elem_add(qd.ambient, out,
                   elem_scale(qd.ambient, c[j], qd.t_generators[j]));
  }
  return out;
}

}  // namespace wittlink
