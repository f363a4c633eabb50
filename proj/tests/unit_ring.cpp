#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wittlink/ring.hpp"

using namespace wittlink;

namespace {

std::mt19937_64 rng(20260822u);

IntPoly random_poly(int max_deg, long long coeff_lo, long long coeff_hi) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long long> coeff(coeff_lo, coeff_hi);
  int d = deg(rng);
  IntPoly p(d + 1);
  for (int i = 0; i <= d; ++i) p[i] = coeff(rng);
  return poly_trim(std::move(p));
}

IntPoly random_poly2(int max_deg) { return random_poly(max_deg, 0, 1); }

}  // namespace

TEST_CASE("polynomial basics") {
  CHECK(poly_is_zero(poly_from({})));
  CHECK(poly_degree(poly_from({})) == -1);
  CHECK(poly_degree(poly_from({0, 0, 3})) == 2);
  CHECK(poly_eq(poly_add(poly_from({1, 2}), poly_from({0, -2})),
                poly_from({1})));
  CHECK(poly_eq(poly_mul(poly_from({1, 1}), poly_from({1, 1})),
                poly_from({1, 2, 1})));
  CHECK(poly_eval(poly_from({1, 2, 3}), 2) == Int(17));
  CHECK(poly_eq(poly_subst_pow(poly_from({1, 1}), 2), poly_from({1, 0, 1})));
  CHECK(poly_coeff(poly_from({5, 7}), 1) == Int(7));
  CHECK(poly_coeff(poly_from({5, 7}), 9) == Int(0));
}

TEST_CASE("polynomial printing") {
  CHECK(poly_to_string(poly_from({0, 1, 0, 2})) == "t + 2t^3");
  CHECK(poly_to_string(poly_from({})) == "0");
  CHECK(poly_to_string(poly_from({1, -1})) == "1 - t");
  CHECK(poly_to_string(poly_from({-2, 0, 1})) == "-2 + t^2");
  CHECK(poly_to_string(poly_from({7})) == "7");
}

TEST_CASE("involution on polynomials and dyadic values") {
  CHECK(poly_eq(poly_involve(poly_from({0, 1, 1}), Ring::ZtMinus),
                poly_from({0, -1, 1})));
  CHECK(poly_eq(poly_involve(poly_from({0, 1, 1}), Ring::ZtPlus),
                poly_from({0, 1, 1})));

  DyadicPoly half = make_dyadic(poly_from({1, 1}), 1, Modulus::None,
                                Ring::ZtMinus);
  DyadicPoly conj = involve(half);
  CHECK(poly_eq(conj.num, poly_from({1, -1})));
  CHECK(conj.denom_exp == 1);

  for (int rep = 0; rep < 10000; ++rep) {
    Ring ring = (rep % 2 == 0) ? Ring::ZtPlus : Ring::ZtMinus;
    DyadicPoly x = make_dyadic(random_poly(6, -8, 8), rep % 3, Modulus::None,
                               ring);
    CHECK(dyadic_eq(involve(involve(x)), x));
  }
}

TEST_CASE("verschiebung") {
  DyadicPoly x = make_dyadic(poly_from({1, 1}), 0, Modulus::None, Ring::ZtPlus);
  CHECK(poly_eq(verschiebung(x, 2).num, poly_from({1, 0, 1})));

  DyadicPoly y = make_dyadic(poly_from({0, 1}), 0, Modulus::None,
                             Ring::ZtMinus);
  CHECK_THROWS_WITH_AS(verschiebung(y, 2), doctest::Contains("even"),
                       WittError);
  CHECK(poly_eq(verschiebung(y, 3).num, poly_from({0, 0, 0, 1})));

  for (int rep = 0; rep < 200; ++rep) {
    std::uniform_int_distribution<int> pick(0, 2);
    int i = 2 * pick(rng) + 1;
    int j = 2 * pick(rng) + 1;
    DyadicPoly z = make_dyadic(random_poly(4, -4, 4), 0, Modulus::None,
                               Ring::ZtMinus);
    CHECK(dyadic_eq(verschiebung(verschiebung(z, i), j),
                    verschiebung(z, i * j)));
  }
  for (int rep = 0; rep < 200; ++rep) {
    std::uniform_int_distribution<int> pick(1, 4);
    int i = pick(rng);
    int j = pick(rng);
    DyadicPoly z = make_dyadic(random_poly(4, -4, 4), 0, Modulus::None,
                               Ring::ZtPlus);
    CHECK(dyadic_eq(verschiebung(verschiebung(z, i), j),
                    verschiebung(z, i * j)));
  }
}

TEST_CASE("even-odd decomposition") {
  auto [ev, od] = evodd_decompose(poly_from({1, 1, 1}));
  CHECK(poly_eq(ev, poly_from({1, 1})));
  CHECK(poly_eq(od, poly_from({1})));

  for (int rep = 0; rep < 1000; ++rep) {
    IntPoly p = random_poly2(9);
    auto [e, o] = evodd_decompose(p);
    IntPoly back = poly2_add(poly_subst_pow(e.empty() ? poly_from({0}) : e, 2),
                             poly2_mul(poly_from({0, 1}),
                                       poly_subst_pow(
                                           o.empty() ? poly_from({0}) : o, 2)));
    CHECK(poly_eq(back, poly2_reduce(p)));
  }
}

TEST_CASE("arf reduction examples") {
  CHECK(poly_eq(arf_reduce(poly_from({0, 0, 1}), Subring::Z2t),
                poly_from({0, 1})));
  CHECK(poly_eq(arf_reduce(poly_from({0, 1, 0, 0, 1}), Subring::Z2t),
                poly_from({})));
  CHECK(poly_eq(arf_reduce(poly_from({0, 0, 0, 1}), Subring::Z2t),
                poly_from({0, 0, 0, 1})));
  CHECK(poly_eq(arf_reduce(poly_from({0, 0, 0, 0, 1}), Subring::Z2t2),
                poly_from({0, 0, 1})));
  CHECK(poly_eq(arf_reduce(poly_t_power(6), Subring::t2Z2t2), poly_t_power(6)));
  CHECK(poly_eq(arf_reduce(poly_t_power(8), Subring::t2Z2t2), poly_t_power(2)));
  CHECK_THROWS_AS(arf_reduce(poly_from({0, 0, 0, 1}), Subring::Z2t2),
                  WittError);
  CHECK_THROWS_AS(arf_reduce(poly_from({1}), Subring::t2Z2t2), WittError);
}

TEST_CASE("arf reduction kills squares minus element and is idempotent") {
  for (int rep = 0; rep < 2000; ++rep) {
    IntPoly x = random_poly2(5);
    IntPoly delta = poly2_add(poly2_frobenius(x), x);
    CHECK(poly_eq(arf_reduce(delta, Subring::Z2t), poly_from({})));

    IntPoly p = random_poly2(8);
    IntPoly r = arf_reduce(p, Subring::Z2t);
    CHECK(poly_eq(arf_reduce(poly2_add(p, delta), Subring::Z2t), r));
    CHECK(poly_eq(arf_reduce(r, Subring::Z2t), r));
    for (size_t i = 2; i < r.size(); i += 2) CHECK(r[i] == 0);
  }
  for (int rep = 0; rep < 2000; ++rep) {
    IntPoly x2 = poly_subst_pow(random_poly2(3), 2);
    IntPoly delta = poly2_add(poly2_frobenius(x2), x2);
    IntPoly p = poly_subst_pow(random_poly2(4), 2);
    CHECK(poly_eq(arf_reduce(poly2_add(p, delta), Subring::Z2t2),
                  arf_reduce(p, Subring::Z2t2)));
    IntPoly r = arf_reduce(p, Subring::Z2t2);
    for (size_t i = 1; i < r.size(); ++i) {
      if (r[i] != 0) CHECK(i % 4 == 2);
    }
  }
}

TEST_CASE("dyadic canonicalization") {
  DyadicPoly a = make_dyadic(poly_from({2}), 1, Modulus::ModR, Ring::ZtPlus);
  CHECK(dyadic_is_zero(a));

  DyadicPoly b = make_dyadic(poly_from({0, 6}), 1, Modulus::ModR, Ring::ZtPlus);
  CHECK(dyadic_is_zero(b));  // 6t/2 = 3t is integral

  DyadicPoly b2 = make_dyadic(poly_from({0, 3}), 1, Modulus::ModR,
                              Ring::ZtPlus);
  CHECK(poly_eq(b2.num, poly_from({0, 1})));
  CHECK(b2.denom_exp == 1);

  DyadicPoly c = make_dyadic(poly_from({0, 1}), 1, Modulus::ModR, Ring::ZtPlus);
  CHECK(dyadic_is_zero(dyadic_add(c, c)));

  DyadicPoly d = make_dyadic(poly_from({0, 4}), 2, Modulus::None, Ring::ZtPlus);
  CHECK(d.denom_exp == 0);
  CHECK(poly_eq(d.num, poly_from({0, 1})));

  CHECK_THROWS_AS(make_dyadic(poly_from({0, 1}), 0, Modulus::None, Ring::Z),
                  WittError);
}

TEST_CASE("quadratic quotient keeps odd exponents exact over the minus ring") {
  DyadicPoly three_t = make_dyadic(poly_from({0, 3}), 0,
                                   Modulus::ModOnePlusStar, Ring::ZtMinus);
  DyadicPoly one_t = make_dyadic(poly_from({0, 1}), 0, Modulus::ModOnePlusStar,
                                 Ring::ZtMinus);
  CHECK(!dyadic_eq(three_t, one_t));

  DyadicPoly even = make_dyadic(poly_from({0, 0, 6}), 0,
                                Modulus::ModOnePlusStar, Ring::ZtMinus);
  CHECK(dyadic_is_zero(even));

  DyadicPoly plus_three_t = make_dyadic(poly_from({0, 3}), 0,
                                        Modulus::ModOnePlusStar, Ring::ZtPlus);
  CHECK(dyadic_eq(plus_three_t, make_dyadic(poly_from({0, 1}), 0,
                                            Modulus::ModOnePlusStar,
                                            Ring::ZtPlus)));
}

TEST_CASE("conjugation scaling descends to the quadratic quotient") {
  for (int rep = 0; rep < 2000; ++rep) {
    Ring ring = (rep % 2 == 0) ? Ring::ZtPlus : Ring::ZtMinus;
    IntPoly num = random_poly(5, -8, 8);
    IntPoly w = random_poly(4, -4, 4);
    IntPoly r = random_poly(3, -3, 3);
    int k = rep % 3;
    IntPoly shift = poly_scale(poly_add(w, poly_involve(w, ring)),
                               pow2(k));
    IntPoly shifted = poly_add(num, shift);
    DyadicPoly x = make_dyadic(num, k, Modulus::ModOnePlusStar, ring);
    DyadicPoly y = make_dyadic(shifted, k, Modulus::ModOnePlusStar, ring);
    CHECK(dyadic_eq(x, y));
    CHECK(dyadic_eq(dyadic_scale_conj(x, r), dyadic_scale_conj(y, r)));
  }
}

TEST_CASE("one plus star pushforward") {
  DyadicPoly bxx = make_dyadic(poly_from({0, 1}), 1, Modulus::ModR,
                               Ring::ZtPlus);
  DyadicPoly q = one_plus_star(bxx);
  CHECK(q.mod == Modulus::ModOnePlusStar);
  CHECK(poly_eq(q.num, poly_from({0, 1})));
  CHECK(q.denom_exp == 0);

  DyadicPoly bm = make_dyadic(poly_from({0, 1}), 1, Modulus::ModR,
                              Ring::ZtMinus);
  CHECK(dyadic_is_zero(one_plus_star(bm)));
}

TEST_CASE("tate class construction and action") {
  CHECK_THROWS_AS(make_tate(poly_from({0, 1}), Ring::ZtMinus), WittError);
  CHECK_THROWS_AS(make_tate(poly_from({0, 1}), Ring::Z), WittError);
  TateClass x = make_tate(poly_from({1}), Ring::ZtPlus);
  TateClass tx = tate_act(poly_from({0, 1}), x);
  CHECK(poly_eq(tx.rep, poly_from({0, 0, 1})));

  for (int rep = 0; rep < 500; ++rep) {
    IntPoly a = random_poly2(4);
    IntPoly b = random_poly2(4);
    TateClass z = make_tate(poly_subst_pow(random_poly2(3), 2), Ring::ZtMinus);
    TateClass lhs = tate_act(poly2_mul(a, b), z);
    TateClass rhs = tate_act(a, tate_act(b, z));
    CHECK(tate_eq(lhs, rhs));
  }
}

TEST_CASE("tate maps of half-integer values") {
  DyadicPoly half_t_plus = make_dyadic(poly_from({0, 1}), 1, Modulus::ModR,
                                       Ring::ZtPlus);
  CHECK(poly_eq(tate_two(half_t_plus), poly_from({0, 1})));
  CHECK(poly_eq(tate_one_plus_star(half_t_plus).rep, poly_from({0, 1})));

  DyadicPoly half_t_minus = make_dyadic(poly_from({0, 1}), 1, Modulus::ModR,
                                        Ring::ZtMinus);
  CHECK(tate_is_zero(tate_one_plus_star(half_t_minus)));

  CHECK_THROWS_AS(
      tate_one_plus_star(make_dyadic(poly_from({1}), 2, Modulus::ModR,
                                     Ring::ZtPlus)),
      WittError);

  for (int rep = 0; rep < 500; ++rep) {
    Ring ring = (rep % 3 == 0) ? Ring::ZtPlus
                               : ((rep % 3 == 1) ? Ring::ZtMinus : Ring::Z);
    IntPoly raw;
    if (ring == Ring::Z) {
      raw = random_poly2(0);
    } else if (ring == Ring::ZtMinus) {
      raw = poly_subst_pow(random_poly2(3), 2);
    } else {
      raw = random_poly2(5);
    }
    TateClass c = make_tate(raw, ring);
    CHECK(tate_eq(tate_one_plus_star(tate_one_plus_star_section(c)), c));

    IntPoly y = (ring == Ring::Z) ? random_poly2(0) : random_poly2(5);
    CHECK(poly_eq(tate_two(tate_two_inv(y, ring)), poly2_reduce(y)));
  }
}

TEST_CASE("value printing") {
  DyadicPoly x = make_dyadic(poly_from({0, 1}), 1, Modulus::ModR, Ring::ZtPlus);
  CHECK(dyadic_to_string(x) == "t/2^1");
  CHECK(dyadic_to_string(dyadic_zero(Modulus::ModR, Ring::ZtPlus)) == "0");
  DyadicPoly y = make_dyadic(poly_from({1, 0, 3}), 2, Modulus::None,
                             Ring::ZtPlus);
  CHECK(dyadic_to_string(y) == "1 + 3t^2/2^2");
}

TEST_CASE("bezout over Z2[t]") {
  for (int rep = 0; rep < 500; ++rep) {
    std::vector<IntPoly> xs;
    int n = 1 + rep % 4;
    for (int i = 0; i < n; ++i) xs.push_back(random_poly2(5));
    auto [g, coeffs] = poly2_bezout(xs);
    IntPoly acc;
    for (int i = 0; i < n; ++i) acc = poly2_add(acc, poly2_mul(coeffs[i], xs[i]));
    CHECK(poly_eq(acc, g));
    for (int i = 0; i < n; ++i) {
      if (poly_is_zero(xs[i])) continue;
      IntPoly rem;
      poly2_divmod(xs[i], g, &rem);
      CHECK(poly_is_zero(rem));
    }
  }
}
