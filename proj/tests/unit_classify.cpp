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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <utility>
#include <vector>

#include "wittlink/classify.hpp"
#include "wittlink/forms.hpp"
#include "wittlink/invariants.hpp"

using namespace wittlink;

namespace {

std::mt19937_64 rng(718205u);

IntPoly rpoly(int maxdeg, long long mod) {
  std::uniform_int_distribution<int> dd(0, maxdeg);
  std::uniform_int_distribution<long long> dc(0, mod - 1);
  int deg = dd(rng);
  IntPoly p(deg + 1);
  for (int i = 0; i <= deg; ++i) p[i] = Int(dc(rng));
  return poly_trim(std::move(p));
}

/* Random polynomial with zero constant term. */
IntPoly rtpoly(int maxdeg, long long mod) {
  return poly_trim(poly_mul(poly_t_power(1), rpoly(maxdeg - 1, mod)));
}

int rint(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng);
}

/* Quotient by t of a polynomial with zero constant term. */
IntPoly quot_t(const IntPoly& p) {
  if (p.empty()) return {};
  return poly_trim(IntPoly(p.begin() + 1, p.end()));
}

WittCoord plus_coord(const IntPoly& c1, const IntPoly& c2) {
  WittCoord w;
  w.ring = Ring::ZtPlus;
  w.c1 = c1;
  w.c2 = c2;
  return w;
}

LinkingForm nform(const IntPoly& p, const IntPoly& g,
                  Ring ring = Ring::ZtPlus) {
  return form_N(p, g, ring);
}

/* The split map image of q2 in t Z_2[t]: N_{1,q2} + neg(N_{t,q2/t}). */
LinkingForm j2_image(const IntPoly& q2) {
  LinkingForm out = nform(poly_const(1), q2);
  return form_sum(out, form_neg(nform(poly_t_power(1), quot_t(q2))));
}

/* Hyperbolic form of exponent four: Z_4 x Z_4 with b = antidiag(1/4) and
   q = 0 on both generators. */
LinkingForm hyper4(Ring ring) {
  TorsionModule m = make_module({Piece::cyclic(2), Piece::cyclic(2)}, ring);
  DyadicPoly half4 = make_dyadic(poly_const(1), 2, Modulus::ModR, ring);
  DyadicPoly zb = make_dyadic({}, 0, Modulus::ModR, ring);
  DyadicPoly zq = make_dyadic({}, 0, Modulus::ModOnePlusStar, ring);
  return make_form(m, 1, {{zb, half4}, {half4, zb}}, {zq, zq});
}

}  // namespace

TEST_CASE("coordinates of the standard generators") {
  WittCoord b = classify(nform(poly_t_power(1), poly_const(1)));
  CHECK(witt_coord_eq(b, plus_coord(poly_t_power(1), {})));

  WittCoord c = classify(j2_image(poly_t_power(1)));
  CHECK(witt_coord_eq(c, plus_coord({}, poly_t_power(1))));

  WittCoord d = classify(nform(poly_t_power(2), poly_const(1), Ring::ZtMinus));
  CHECK(d.ring == Ring::ZtMinus);
  CHECK(poly_eq(d.c, poly_t_power(2)));

  CHECK(witt_coord_is_zero(classify(zero_form(Ring::ZtPlus))));
  CHECK(witt_coord_is_zero(classify(zero_form(Ring::ZtMinus))));
  CHECK(witt_coord_is_zero(classify(zero_form(Ring::Z))));

  LinkingForm r4 = form_rank1z4(Ring::Z);
  WittCoord z = classify(r4);
  CHECK(z.rk == rank_inv(r4));
  CHECK(z.gs == gauss_sum(r4));
  CHECK(z.rk == 0);
  CHECK(z.gs == 1);
}

TEST_CASE("canonical representatives fold doubled monomials") {
  auto scaled = [](int c, int k) { return poly_scale(poly_t_power(k), c); };
  CHECK(poly_eq(witt_canonical_c1(scaled(2, 2)), scaled(2, 1)));
  CHECK(poly_eq(witt_canonical_c1(scaled(2, 4)), scaled(2, 1)));
  CHECK(poly_eq(witt_canonical_c1(scaled(2, 6)), scaled(2, 3)));
  CHECK(poly_eq(witt_canonical_c1(scaled(2, 12)), scaled(2, 3)));
  CHECK(poly_eq(witt_canonical_c1(scaled(3, 2)),
                poly_add(poly_t_power(2), scaled(2, 1))));
  CHECK(poly_eq(witt_canonical_c1(scaled(5, 1)), poly_t_power(1)));
  CHECK(poly_eq(witt_canonical_c1(scaled(-1, 1)), scaled(3, 1)));
  CHECK(poly_is_zero(
      witt_canonical_c1(poly_add(scaled(2, 1), scaled(2, 2)))));
  CHECK(poly_eq(witt_canonical_c1(poly_const(2)), poly_const(2)));
  CHECK(poly_is_zero(witt_canonical_c1({})));
  /* Already-canonical polynomials are fixed. */
  IntPoly mixed = poly_add(poly_t_power(2), scaled(2, 3));
  CHECK(poly_eq(witt_canonical_c1(mixed), mixed));
}

TEST_CASE("doubled parameters are classified through the Arf step") {
  auto scaled = [](int c, int k) { return poly_scale(poly_t_power(k), c); };
  /* B_1 of these containers vanishes mod 2, so c1 comes entirely from the
     residual Arf invariant. */
  WittCoord a = classify(nform(scaled(2, 1), poly_const(1)));
  CHECK(witt_coord_eq(a, plus_coord(scaled(2, 1), {})));

  WittCoord b = classify(nform(scaled(2, 2), poly_const(1)));
  CHECK(witt_coord_eq(b, plus_coord(scaled(2, 1), {})));

  WittCoord c = classify(nform(scaled(2, 4), poly_const(1)));
  CHECK(witt_coord_eq(c, plus_coord(scaled(2, 1), {})));

  WittCoord d = classify(nform(scaled(2, 6), poly_const(1)));
  CHECK(witt_coord_eq(d, plus_coord(scaled(2, 3), {})));

  WittCoord e = classify(nform(scaled(3, 1), poly_const(1)));
  CHECK(witt_coord_eq(e, plus_coord(scaled(3, 1), {})));
}

TEST_CASE("round trip through the splitting maps") {
  for (int rep = 0; rep < 60; ++rep) {
    IntPoly tp = rtpoly(5, 4);
    IntPoly tq = rtpoly(5, 2);
    LinkingForm m = form_sum(nform(tp, poly_const(1)), j2_image(tq));
    WittCoord w = classify(m);
    CHECK(witt_coord_eq(w, plus_coord(witt_canonical_c1(tp), tq)));
  }
}

TEST_CASE("minus-ring coordinates recover the container parameter") {
  for (int rep = 0; rep < 40; ++rep) {
    IntPoly p = poly_subst_pow(rpoly(2, 4), 2);
    IntPoly a = poly_trim(poly_mul(poly_t_power(2), p));
    LinkingForm m = nform(a, poly_const(1), Ring::ZtMinus);
    WittCoord w = classify(m);
    CHECK(poly_eq(w.c, poly2_reduce(a)));
  }
}

TEST_CASE("Verschiebung action on coordinates") {
  WittCoord b = plus_coord(poly_t_power(1), {});
  WittCoord vb = v_action(b, 2);
  CHECK(witt_coord_eq(vb, plus_coord(poly_t_power(2), {})));

  WittCoord c = plus_coord({}, poly_t_power(1));
  CHECK(witt_coord_is_zero(v_action(c, 2)));
  CHECK(witt_coord_eq(v_action(c, 3), plus_coord({}, poly_t_power(3))));

  WittCoord d;
  d.ring = Ring::ZtMinus;
  d.c = poly_t_power(2);
  CHECK(poly_eq(v_action(d, 3).c, poly_t_power(6)));
  CHECK_THROWS_AS(v_action(d, 2), WittError);

  WittCoord z;
  z.ring = Ring::Z;
  z.gs = 2;
  CHECK_THROWS_AS(v_action(z, 3), WittError);
  CHECK_THROWS_AS(v_action(b, 0), WittError);
}

TEST_CASE("Verschiebung on forms matches the coordinate action") {
  for (int rep = 0; rep < 12; ++rep) {
    IntPoly tp = rtpoly(4, 4);
    IntPoly tq = rtpoly(4, 2);
    LinkingForm m = form_sum(nform(tp, poly_const(1)), j2_image(tq));
    WittCoord w = classify(m);
    int k = rint(1, 4);
    WittCoord lhs = classify(apply_verschiebung(m, k));
    CHECK(witt_coord_eq(lhs, v_action(w, k)));
  }
  for (int rep = 0; rep < 8; ++rep) {
    IntPoly a =
        poly_trim(poly_mul(poly_t_power(2), poly_subst_pow(rpoly(2, 2), 2)));
    LinkingForm m = nform(a, poly_const(1), Ring::ZtMinus);
    int k = 2 * rint(0, 2) + 1;
    WittCoord lhs = classify(apply_verschiebung(m, k));
    CHECK(witt_coord_eq(lhs, v_action(classify(m), k)));
  }
}

TEST_CASE("annihilators of the generators vanish") {
  LinkingForm b = nform(poly_t_power(1), poly_const(1));
  LinkingForm four = form_sum(form_sum(b, b), form_sum(b, b));
  CHECK(witt_coord_is_zero(classify(four)));

  /* 2 V_2 - 2 annihilates the order-four generator. */
  LinkingForm vb = apply_verschiebung(b, 2);
  LinkingForm rel =
      form_sum(form_sum(vb, vb), form_sum(form_neg(b), form_neg(b)));
  CHECK(witt_coord_is_zero(classify(rel)));

  LinkingForm sq = nform(poly_t_power(2), poly_const(1));
  LinkingForm rel2 =
      form_sum(form_sum(sq, sq), form_sum(form_neg(b), form_neg(b)));
  CHECK(witt_coord_is_zero(classify(rel2)));

  for (int rep = 0; rep < 8; ++rep) {
    IntPoly tq = rtpoly(4, 2);
    LinkingForm j2 = j2_image(tq);
    CHECK(witt_coord_is_zero(classify(form_sum(j2, j2))));
    CHECK(witt_coord_is_zero(classify(apply_verschiebung(j2, 2))));
  }

  for (int rep = 0; rep < 6; ++rep) {
    IntPoly a =
        poly_trim(poly_mul(poly_t_power(2), poly_subst_pow(rpoly(2, 2), 2)));
    LinkingForm m = nform(a, poly_const(1), Ring::ZtMinus);
    CHECK(witt_coord_is_zero(classify(form_sum(m, m))));
  }
}

TEST_CASE("reduction to exponent two") {
  LinkingForm b = nform(poly_t_power(1), poly_const(1));
  LinkingForm red = reduce_to_exp2(b);
  CHECK(form_eq(red, b));

  /* The quarter form has a nonzero level-two obstruction. */
  for (Ring ring : {Ring::ZtPlus, Ring::Z}) {
    try {
      reduce_to_exp2(form_rank1z4(ring));
      CHECK(false);
    } catch (const WittError& e) {
      CHECK(e.code() == ErrorCode::ObstructionNonzero);
      CHECK(e.detail() == "1");
    }
  }

  LinkingForm h4 = hyper4(Ring::ZtPlus);
  CHECK(h4.module.exponent == 2);
  LinkingForm lifted = form_sum(b, h4);
  LinkingForm down = reduce_to_exp2(lifted);
  CHECK(down.module.exponent <= 1);
  CHECK(witt_coord_eq(classify(down), plus_coord(poly_t_power(1), {})));
  CHECK(witt_coord_eq(classify(lifted), plus_coord(poly_t_power(1), {})));
}

TEST_CASE("exponent halving on even-type forms") {
  LinkingForm h4 = hyper4(Ring::ZtPlus);
  LinkingForm out = devissage_F(h4, 2);
  CHECK(out.module.exponent <= 1);
  CHECK(witt_coord_is_zero(classify(out)));

  LinkingForm b = nform(poly_t_power(1), poly_const(1));
  LinkingForm mix = devissage_F(form_sum(h4, b), 2);
  CHECK(mix.module.exponent <= 1);
  CHECK(witt_coord_eq(classify(mix), plus_coord(poly_t_power(1), {})));

  /* Input already of lower exponent passes through with its class. */
  LinkingForm thin = devissage_F(b, 2);
  CHECK(thin.module.exponent <= 1);
  CHECK(witt_coord_eq(classify(thin), plus_coord(poly_t_power(1), {})));

  CHECK_THROWS_AS(devissage_F(b, 1), WittError);
  try {
    devissage_F(form_rank1z4(Ring::ZtPlus), 2);
    CHECK(false);
  } catch (const WittError& e) {
    CHECK(e.code() == ErrorCode::NotEvenType);
  }
  try {
    devissage_G(form_rank1z4(Ring::ZtPlus), 2);
    CHECK(false);
  } catch (const WittError& e) {
    CHECK(e.code() == ErrorCode::NotInKernelOfQ);
  }
}

TEST_CASE("halving inverts the forgetful lift on random classes") {
  for (int rep = 0; rep < 15; ++rep) {
    IntPoly tp = rtpoly(4, 4);
    IntPoly tq = rtpoly(4, 2);
    LinkingForm m = form_sum(nform(tp, poly_const(1)), j2_image(tq));
    WittCoord w = classify(m);
    LinkingForm lifted = form_sum(m, hyper4(Ring::ZtPlus));
    CHECK(lifted.module.exponent == 2);
    LinkingForm down = devissage_F(lifted, 2);
    CHECK(down.module.exponent <= 1);
    CHECK(witt_coord_eq(classify(down), w));
  }
}

TEST_CASE("equality of Witt classes") {
  LinkingForm b = nform(poly_t_power(1), poly_const(1));
  CHECK(witt_equal(b, form_sum(b, form_hyperbolic(Ring::ZtPlus))));
  CHECK(!witt_equal(b, nform(poly_t_power(2), poly_const(1))));
  CHECK(!witt_equal(b, zero_form(Ring::ZtPlus)));

  /* Unreduced operands are fine when the difference is reduced. */
  LinkingForm arf1 = nform(poly_const(1), poly_const(1));
  CHECK(!witt_equal(arf1, zero_form(Ring::ZtPlus)));
  CHECK(witt_equal(arf1, arf1));

  LinkingForm r4 = form_rank1z4(Ring::ZtPlus);
  CHECK(witt_equal(r4, r4));
  CHECK(!witt_equal(r4, zero_form(Ring::ZtPlus)));

  LinkingForm d = nform(poly_t_power(2), poly_const(1), Ring::ZtMinus);
  LinkingForm pad = form_P(poly_t_power(2), poly_t_power(4), Ring::ZtMinus);
  CHECK(witt_equal(d, form_sum(d, pad)));

  CHECK(witt_equal(form_rank1z4(Ring::Z), form_rank1z4(Ring::Z)));
  CHECK(!witt_equal(form_rank1z4(Ring::Z), zero_form(Ring::Z)));

  CHECK_THROWS_AS(witt_equal(b, d), WittError);
}

TEST_CASE("element orders") {
  LinkingForm b = nform(poly_t_power(1), poly_const(1));
  CHECK(element_order(classify(b)) == 4);
  CHECK(element_order(classify(form_sum(b, form_neg(b)))) == 1);
  CHECK(element_order(classify(form_sum(b, b))) == 2);
  CHECK(element_order(classify(nform(poly_t_power(2), poly_const(1)))) == 4);
  CHECK(element_order(classify(j2_image(poly_t_power(1)))) == 2);

  WittCoord fold2 = plus_coord(poly_add(poly_t_power(1), poly_t_power(2)), {});
  CHECK(element_order(fold2) == 2);

  WittCoord d =
      classify(nform(poly_t_power(2), poly_const(1), Ring::ZtMinus));
  CHECK(element_order(d) == 2);

  CHECK(element_order(classify(form_rank1z4(Ring::Z))) == 8);
  WittCoord z;
  z.ring = Ring::Z;
  z.gs = 4;
  CHECK(element_order(z) == 2);
  z.rk = 1;
  CHECK(element_order(z) == 2);
  z.gs = 2;
  CHECK(element_order(z) == 4);
  z.rk = 0;
  z.gs = 0;
  CHECK(element_order(z) == 1);
}

TEST_CASE("even-type minus-ring forms are split") {
  for (int n = 0; n <= 5; ++n) {
    LinkingForm p =
        form_P(poly_t_power(4 * n + 2), poly_const(1), Ring::ZtMinus);
    ModElement x = elem_make(
        p.module, {poly_const(1), poly_t_power(2 * n + 1)});
    Submodule l = submodule_make(p.module, {x});
    CHECK(is_lagrangian(p, l));
    CHECK(witt_coord_is_zero(classify(p)));
  }
  /* Zero constant terms keep the evaluation at t = 0 split, so the class
     stays reduced. */
  for (int rep = 0; rep < 15; ++rep) {
    IntPoly p = poly_mul(poly_t_power(2), poly_subst_pow(rpoly(2, 4), 2));
    IntPoly g = poly_mul(poly_t_power(2), poly_subst_pow(rpoly(2, 4), 2));
    LinkingForm f = form_P(poly_trim(p), poly_trim(g), Ring::ZtMinus);
    CHECK(witt_coord_is_zero(classify(f)));
  }
}

TEST_CASE("classification agrees with bounded Lagrangian search") {
  std::vector<std::pair<LinkingForm, bool>> cases;
  LinkingForm b = nform(poly_t_power(1), poly_const(1));
  cases.emplace_back(form_hyperbolic(Ring::ZtPlus), true);
  cases.emplace_back(b, false);
  cases.emplace_back(form_sum(b, form_hyperbolic(Ring::ZtPlus)), false);
  cases.emplace_back(form_sum(b, form_neg(b)), true);
  cases.emplace_back(form_sum(b, b), false);
  cases.emplace_back(j2_image(poly_t_power(1)), false);
  cases.emplace_back(
      form_sum(nform(poly_t_power(2), poly_const(1)), form_neg(b)), false);
  for (const auto& [m, trivial] : cases) {
    CHECK(witt_coord_is_zero(classify(m)) == trivial);
    CHECK(brute_lagrangian(m, 2).has_value() == trivial);
  }
}

TEST_CASE("classification is a Witt-class invariant") {
  for (int rep = 0; rep < 12; ++rep) {
    IntPoly tp = rtpoly(4, 4);
    IntPoly tq = rtpoly(4, 2);
    LinkingForm m = form_sum(nform(tp, poly_const(1)), j2_image(tq));
    WittCoord w = classify(m);

    LinkingForm x = nform(rtpoly(4, 4), poly_const(1));
    LinkingForm big = form_sum(
        form_sum(m, form_hyperbolic(Ring::ZtPlus)), form_sum(x, form_neg(x)));
    CHECK(witt_coord_eq(classify(big), w));

    /* Reduce at one isotropic generator of the hyperbolic summand. */
    int base = module_num_gens(m.module);
    std::vector<IntPoly> coords(module_num_gens(big.module));
    coords[base] = poly_const(1);
    ModElement iso = elem_make(big.module, coords);
    Submodule s = submodule_make(big.module, {iso});
    LinkingForm red = sublagrangian_reduce(big, s).form;
    CHECK(witt_coord_eq(classify(red), w));
  }
}

TEST_CASE("classification rejects out-of-domain input") {
  CHECK_THROWS_AS(classify(zero_form(Ring::ZtPlus, -1)), WittError);

  try {
    classify(nform(poly_const(1), poly_const(1)));
    CHECK(false);
  } catch (const WittError& e) {
    CHECK(e.code() == ErrorCode::NotReducedClass);
  }
  try {
    classify(nform(poly_const(1), poly_const(1), Ring::ZtMinus));
    CHECK(false);
  } catch (const WittError& e) {
    CHECK(e.code() == ErrorCode::NotReducedClass);
  }
  try {
    classify(form_rank1z4(Ring::ZtPlus));
    CHECK(false);
  } catch (const WittError& e) {
    CHECK(e.code() == ErrorCode::NotReducedClass);
  }
}
