#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wittlink/torsion.hpp"

using namespace wittlink;

namespace {

std::mt19937_64 rng(44620u);

IntPoly random_poly_mod(int max_deg, int modulus) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(0, modulus - 1);
  int d = deg(rng);
  IntPoly p(d + 1);
  for (int i = 0; i <= d; ++i) p[i] = coeff(rng);
  return poly_trim(std::move(p));
}

TorsionModule z2t_rank2() {
  return make_module({Piece::cyclic(1), Piece::cyclic(1)}, Ring::ZtPlus);
}

ModElement elem2(const TorsionModule& m, IntPoly a, IntPoly b) {
  return elem_make(m, {std::move(a), std::move(b)});
}

ModElement random_elem(const TorsionModule& m) {
  std::vector<IntPoly> coords;
  for (const Piece& pc : m.pieces) {
    if (pc.kind == Piece::Kind::Cyclic) {
      coords.push_back(random_poly_mod(3, 1 << pc.a));
    } else {
      IntPoly a = random_poly_mod(2, 2);
      IntPoly b = random_poly_mod(2, 2);
      coords.push_back(poly_add(poly_mul(a, pc.p), poly_scale(b, 2)));
    }
  }
  return elem_make(m, std::move(coords));
}

}  // namespace

TEST_CASE("module construction") {
  TorsionModule free2 = z2t_rank2();
  CHECK(free2.exponent == 1);
  CHECK(module_num_gens(free2) == 2);

  TorsionModule mp = make_module({Piece::mp(poly_from({1, 1}))}, Ring::ZtPlus);
  CHECK(mp.exponent == 2);
  CHECK(module_num_gens(mp) == 2);

  TorsionModule z4 = make_module({Piece::cyclic(2)}, Ring::Z);
  CHECK(z4.exponent == 2);

  CHECK_THROWS_AS(make_module({Piece::mp(poly_from({2}))}, Ring::ZtPlus),
                  WittError);
  CHECK_THROWS_AS(make_module({Piece::mp(poly_from({1}))}, Ring::Z), WittError);
  CHECK_THROWS_AS(make_module({Piece::cyclic(0)}, Ring::ZtPlus), WittError);
}

TEST_CASE("element arithmetic and canonical decomposition") {
  TorsionModule m = make_module({Piece::mp(poly_from({1, 1})), Piece::cyclic(2)},
                                Ring::ZtPlus);
  for (int rep = 0; rep < 300; ++rep) {
    ModElement x = random_elem(m);
    ModElement y = random_elem(m);
    ModElement s = elem_add(m, x, y);
    CHECK(elem_eq(m, elem_sub(m, s, y), x));
    PolyVec c = elem_gen_coeffs(m, x);
    CHECK(elem_eq(m, elem_from_gen_coeffs(m, c), x));
    ModElement doubled = elem_scale(m, poly_from({2}), x);
    CHECK(elem_eq(m, doubled, elem_add(m, x, x)));
  }
  ModElement four = elem_scale(m, poly_from({4}), random_elem(m));
  CHECK(elem_is_zero(m, four));
}

TEST_CASE("membership with certificates") {
  TorsionModule m = z2t_rank2();
  Submodule s = submodule_make(m, {elem2(m, poly_from({0, 1}), {})});

  auto hit = membership(m, s, elem2(m, poly_from({0, 0, 1}), {}));
  REQUIRE(hit.has_value());
  CHECK(poly_eq(poly2_reduce((*hit)[0]), poly_from({0, 1})));

  CHECK(!membership(m, s, elem2(m, poly_from({1}), {})).has_value());

  TorsionModule z4t = make_module({Piece::cyclic(2)}, Ring::ZtPlus);
  Submodule two = submodule_make(z4t, {elem_make(z4t, {poly_from({2})})});
  auto cert = membership(z4t, two, elem_make(z4t, {poly_from({0, 2})}));
  REQUIRE(cert.has_value());
  ModElement recon = elem_scale(z4t, (*cert)[0], two.generators[0]);
  CHECK(elem_eq(z4t, recon, elem_make(z4t, {poly_from({0, 2})})));
}

TEST_CASE("membership certificates reconstruct the element") {
  TorsionModule m = make_module(
      {Piece::mp(poly_from({1, 0, 1})), Piece::cyclic(1), Piece::cyclic(2)},
      Ring::ZtPlus);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<ModElement> gens;
    int k = 1 + rep % 3;
    for (int i = 0; i < k; ++i) gens.push_back(random_elem(m));
    Submodule s = submodule_make(m, gens);
    /* A random combination must be a member, and the certificate must
       rebuild it. */
    ModElement target = elem_zero(m);
    for (int i = 0; i < k; ++i) {
      target = elem_add(m, target,
                        elem_scale(m, random_poly_mod(2, 4), gens[i]));
    }
    auto cert = membership(m, s, target);
    REQUIRE(cert.has_value());
    ModElement recon = elem_zero(m);
    for (int i = 0; i < k; ++i) {
      recon = elem_add(m, recon, elem_scale(m, (*cert)[i], gens[i]));
    }
    CHECK(elem_eq(m, recon, target));
  }
}

TEST_CASE("closure worked examples") {
  TorsionModule m = z2t_rank2();
  Submodule s = submodule_make(m, {elem2(m, poly_from({0, 1}), {})});
  Submodule c = closure(m, s);
  Submodule expected = submodule_make(m, {elem2(m, poly_from({1}), {})});
  CHECK(submodule_eq(m, c, expected));

  TorsionModule z4t = make_module({Piece::cyclic(2)}, Ring::ZtPlus);
  Submodule s2 = submodule_make(z4t, {elem_make(z4t, {poly_from({0, 2})})});
  Submodule c2 = closure(z4t, s2);
  Submodule expected2 = submodule_make(z4t, {elem_make(z4t, {poly_from({2})})});
  CHECK(submodule_eq(z4t, c2, expected2));
}

TEST_CASE("closure is monotone and idempotent") {
  TorsionModule m = make_module(
      {Piece::cyclic(1), Piece::cyclic(2), Piece::mp(poly_from({1, 1}))},
      Ring::ZtPlus);
  for (int rep = 0; rep < 60; ++rep) {
    std::vector<ModElement> gens;
    int k = 1 + rep % 2;
    for (int i = 0; i < k; ++i) gens.push_back(random_elem(m));
    Submodule s = submodule_make(m, gens);
    Submodule c = closure(m, s);
    for (const ModElement& g : gens) CHECK(submodule_contains(m, c, g));
    CHECK(submodule_eq(m, closure(m, c), c));
  }
}

TEST_CASE("closure makes quotients length-one") {
  TorsionModule m = z2t_rank2();
  Submodule full = submodule_make(
      m, {elem2(m, poly_from({1}), {}), elem2(m, {}, poly_from({1}))});
  Submodule s = submodule_make(m, {elem2(m, poly_from({0, 1}), {})});

  CHECK_THROWS_AS(quotient_presentation(m, s, full), WittError);
  try {
    quotient_presentation(m, s, full);
  } catch (const WittError& e) {
    CHECK(e.code() == ErrorCode::QuotientNotLengthOne);
  }

  QuotientData qd = quotient_presentation(m, closure(m, s), full);
  CHECK(qd.pres.module.pieces.size() == 1);
}

TEST_CASE("structure decomposition worked examples") {
  {
    TorsionModule z4t = make_module({Piece::cyclic(2)}, Ring::ZtPlus);
    PresentedModule pm = structure_decompose(z4t);
    REQUIRE(pm.module.pieces.size() == 1);
    CHECK(pm.module.pieces[0].kind == Piece::Kind::Mp);
    CHECK(poly_eq(pm.module.pieces[0].p, poly_from({1})));
  }
  {
    TorsionModule mp = make_module({Piece::mp(poly_from({1, 1}))},
                                   Ring::ZtPlus);
    PresentedModule pm = structure_decompose(mp);
    REQUIRE(pm.module.pieces.size() == 1);
    CHECK(pm.module.pieces[0].kind == Piece::Kind::Mp);
    CHECK(poly_eq(pm.module.pieces[0].p, poly_from({1, 1})));
  }
  {
    PresentedModule pm = structure_decompose(z2t_rank2());
    REQUIRE(pm.module.pieces.size() == 2);
    CHECK(pm.module.pieces[0].kind == Piece::Kind::Cyclic);
    CHECK(pm.module.pieces[0].a == 1);
    CHECK(pm.module.pieces[1].kind == Piece::Kind::Cyclic);
  }
  CHECK_THROWS_AS(structure_decompose(make_module({Piece::cyclic(3)},
                                                  Ring::ZtPlus)),
                  WittError);
  CHECK_THROWS_AS(structure_decompose(make_module({Piece::cyclic(2)}, Ring::Z)),
                  WittError);
}

TEST_CASE("presentations catch length-one failures") {
  CHECK_THROWS_AS(present_module(1, {{poly_from({2})}, {poly_from({0, 1})}},
                                 Ring::ZtPlus),
                  WittError);
  CHECK_THROWS_AS(present_module(1, {{poly_from({0, 2})}}, Ring::ZtPlus),
                  WittError);
  PresentedModule ok = present_module(1, {{poly_from({2})}}, Ring::ZtPlus);
  REQUIRE(ok.module.pieces.size() == 1);
  CHECK(ok.module.pieces[0].kind == Piece::Kind::Cyclic);
  CHECK(ok.module.pieces[0].a == 1);
}

TEST_CASE("presentation normal form round-trips") {
  int accepted = 0;
  for (int rep = 0; rep < 400 && accepted < 120; ++rep) {
    std::uniform_int_distribution<int> dgens(1, 3);
    std::uniform_int_distribution<int> drows(0, 3);
    int g = dgens(rng);
    int nrows = drows(rng);
    PolyMat rows(nrows, PolyVec(g));
    for (auto& row : rows) {
      for (auto& e : row) e = random_poly_mod(2, 4);
    }
    PresentedModule pm;
    try {
      pm = present_module(g, rows, Ring::ZtPlus);
    } catch (const WittError& e) {
      CHECK(e.code() == ErrorCode::NotLengthOne);
      continue;
    }
    ++accepted;

    /* Divisibility chain of the Mp parameters. */
    IntPoly prev;
    for (const Piece& pc : pm.module.pieces) {
      if (pc.kind != Piece::Kind::Mp) continue;
      if (!poly_is_zero(prev)) {
        IntPoly rem;
        poly2_divmod(pc.p, prev, &rem);
        CHECK(poly_is_zero(rem));
      }
      prev = pc.p;
    }

    for (int trial = 0; trial < 10; ++trial) {
      PolyVec c(g);
      for (int i = 0; i < g; ++i) c[i] = random_poly_mod(2, 4);
      ModElement x = presented_to_module(pm, c);
      PolyVec back = presented_from_module(pm, x);
      ModElement x2 = presented_to_module(pm, back);
      CHECK(elem_eq(pm.module, x2, x));
    }
  }
  CHECK(accepted >= 100);
}

TEST_CASE("quotient presentations") {
  {
    TorsionModule m = z2t_rank2();
    Submodule full = submodule_make(
        m, {elem2(m, poly_from({1}), {}), elem2(m, {}, poly_from({1}))});
    Submodule s = submodule_make(m, {elem2(m, poly_from({1}), {})});
    QuotientData qd = quotient_presentation(m, s, full);
    REQUIRE(qd.pres.module.pieces.size() == 1);
    CHECK(qd.pres.module.pieces[0].kind == Piece::Kind::Cyclic);
    CHECK(qd.pres.module.pieces[0].a == 1);
  }
  {
    TorsionModule m = make_module({Piece::cyclic(2)}, Ring::ZtPlus);
    Submodule full = submodule_make(m, {elem_make(m, {poly_from({1})})});
    Submodule s = submodule_make(m, {elem_make(m, {poly_from({2})})});
    QuotientData qd = quotient_presentation(m, s, full);
    REQUIRE(qd.pres.module.pieces.size() == 1);
    CHECK(qd.pres.module.pieces[0].kind == Piece::Kind::Cyclic);
  }
  {
    TorsionModule m = z2t_rank2();
    Submodule s = submodule_make(m, {elem2(m, poly_from({1}), {})});
    QuotientData qd = quotient_presentation(m, s, s);
    CHECK(qd.pres.module.pieces.empty());
  }
  {
    TorsionModule m = z2t_rank2();
    Submodule a = submodule_make(m, {elem2(m, poly_from({1}), {})});
    Submodule b = submodule_make(m, {elem2(m, {}, poly_from({1}))});
    CHECK_THROWS_AS(quotient_presentation(m, a, b), WittError);
  }
  {
    TorsionModule m = make_module({Piece::cyclic(3)}, Ring::ZtPlus);
    Submodule full = submodule_make(m, {elem_make(m, {poly_from({1})})});
    Submodule zero = submodule_make(m, {});
    CHECK_THROWS_AS(quotient_presentation(m, zero, full), WittError);
  }
}

TEST_CASE("quotient projection and section round-trip") {
  TorsionModule m = make_module({Piece::cyclic(2), Piece::cyclic(2),
                                 Piece::cyclic(1)},
                                Ring::ZtPlus);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<ModElement> tgens;
    for (int i = 0; i < 3; ++i) tgens.push_back(random_elem(m));
    Submodule t = submodule_make(m, tgens);
    ModElement inside = elem_scale(m, poly_from({2}), tgens[0]);
    Submodule s = closure(m, submodule_make(m, {inside}));
    bool all_in = true;
    for (const ModElement& g : s.generators) {
      if (!submodule_contains(m, t, g)) all_in = false;
    }
    if (!all_in) continue;
    QuotientData qd;
    try {
      qd = quotient_presentation(m, s, t);
    } catch (const WittError& e) {
      CHECK(e.code() == ErrorCode::QuotientNotLengthOne);
      continue;
    }
    for (int trial = 0; trial < 10; ++trial) {
      ModElement x = elem_zero(m);
      for (const ModElement& g : tgens) {
        x = elem_add(m, x, elem_scale(m, random_poly_mod(2, 4), g));
      }
      ModElement y = quotient_project(qd, x);
      ModElement lift = quotient_section(qd, y);
      /* lift and x agree modulo s. */
      ModElement diff = elem_sub(m, x, lift);
      CHECK(submodule_contains(m, s, diff));
      CHECK(elem_eq(qd.pres.module, quotient_project(qd, lift), y));
    }
  }
}

TEST_CASE("submodules of length-one modules are length-one") {
  TorsionModule m = make_module(
      {Piece::mp(poly_from({1, 1})), Piece::cyclic(2), Piece::cyclic(1)},
      Ring::ZtPlus);
  Submodule zero = submodule_make(m, {});
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<ModElement> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(random_elem(m));
    Submodule s = submodule_make(m, gens);
    QuotientData qd = quotient_presentation(m, zero, s);
    (void)qd;  // no throw is the assertion
  }
}

TEST_CASE("higher exponent membership and closure") {
  TorsionModule m = make_module({Piece::cyclic(3), Piece::cyclic(1)},
                                Ring::ZtPlus);
  Submodule s = submodule_make(m, {elem2(m, poly_from({2}), {})});
  CHECK(submodule_contains(m, s, elem2(m, poly_from({6}), {})));
  CHECK(!submodule_contains(m, s, elem2(m, poly_from({1}), {})));
  CHECK(!submodule_contains(m, s, elem2(m, poly_from({4, 0}), poly_from({1}))));

  Submodule st = submodule_make(m, {elem2(m, poly_from({0, 2}), {})});
  Submodule c = closure(m, st);
  CHECK(submodule_eq(m, c, s));
}

TEST_CASE("ring Z modules") {
  TorsionModule m = make_module({Piece::cyclic(2), Piece::cyclic(1)}, Ring::Z);
  ModElement x = elem_make(m, {poly_from({3}), poly_from({1})});
  ModElement y = elem_add(m, x, x);
  CHECK(poly_eq(y.coords[0], poly_from({2})));
  CHECK(poly_is_zero(y.coords[1]));
  CHECK_THROWS_AS(elem_make(m, {poly_from({0, 1}), {}}), WittError);
  CHECK_THROWS_AS(elem_scale(m, poly_from({0, 1}), x), WittError);

  Submodule s = submodule_make(m, {y});
  CHECK(submodule_contains(m, s, elem_make(m, {poly_from({2}), {}})));
  CHECK(!submodule_contains(m, s, x));
}
