#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace crg;
using fx::I;

namespace {

struct Pair {
  std::string name;
  Coring c;
  Algebra b;
};

std::vector<Pair> measuring_pairs() {
  Field f2 = fx::F2(), f3 = fx::F3();
  return {
      {"T_k / F2[C2]", trivial_coring(ground_algebra(f2)), cyclic_group_algebra(f2, 2)},
      {"GC2 / F3[C2]", coalgebra_as_coring(group_coalgebra(f3, 2)), cyclic_group_algebra(f3, 2)},
      {"GC2 / F3xF3", coalgebra_as_coring(group_coalgebra(f3, 2)), diagonal_algebra(f3)},
      {"SW / F2", sweedler_fixture(f2), ground_algebra(f2)},
      {"T_D2 / D2", trivial_coring(diagonal_algebra(f2)), diagonal_algebra(f2)},
      {"T_T2 / F2", trivial_coring(upper_triangular_algebra(f2)), ground_algebra(f2)},
      {"T_T2 / D2", trivial_coring(upper_triangular_algebra(f2)), diagonal_algebra(f2)},
  };
}

std::vector<oracle::Table> nus(const std::vector<Measuring>& ms) {
  std::vector<oracle::Table> out;
  for (const auto& m : ms) out.push_back(oracle::ints(m.nu));
  return out;
}

}  // namespace

TEST_CASE("multiplication is a measuring of A by the trivial coring") {
  for (const Algebra& a : fx::algebras(fx::F3())) CHECK(check_measuring(Measuring{trivial_coring(a), a, a.mult()}));
}

TEST_CASE("unit measuring") {
  Field f = fx::F3();
  Coring gc = coalgebra_as_coring(group_coalgebra(f, 2));
  Measuring unit{gc, ground_algebra(f), gc.eps()};
  CHECK(check_measuring(unit));
  DualRing dual = dual_ring(gc);
  AlgebraMap chi = measuring_to_algebra_map(unit, dual);
  CHECK(chi.matrix == Mat::column(f, dual.alg.unit()));
  CHECK(algebra_map_to_measuring(gc, dual, unit_map(dual.alg)).nu == unit.nu);
  CHECK(action_from_measuring(unit) == I(f, 2));
  CHECK(measuring_from_action(gc, ground_algebra(f), I(f, 2)).nu == unit.nu);

  Measuring scaled{gc, ground_algebra(f), gc.eps().scaled(f.from_int(2))};
  Verdict v = check_measuring(scaled);
  CHECK(v.axiom == "unit");
  CHECK(v.witness == Witness{0});
}

TEST_CASE("measurings agree with brute force") {
  for (const auto& [name, c, b] : measuring_pairs()) {
    CAPTURE(name);
    auto lib = enumerate_measurings(c, b);
    for (const auto& m : lib) CHECK(check_measuring(m));
    auto got = nus(lib);
    auto want = oracle::measurings(c, b);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("measurings biject with algebra maps into the dual ring") {
  for (const auto& [name, c, b] : measuring_pairs()) {
    CAPTURE(name);
    DualRing dual = dual_ring(c);
    auto ms = enumerate_measurings(c, b);
    auto maps = enumerate_algebra_maps(b, dual.alg);
    CHECK(ms.size() == oracle::algebra_maps(oracle::alg(b), oracle::alg(dual.alg)).size());
    CHECK(ms.size() == maps.size());
    std::vector<Mat> images;
    for (const auto& m : ms) {
      AlgebraMap chi = measuring_to_algebra_map(m, dual);
      CHECK(algebra_map_to_measuring(c, dual, chi).nu == m.nu);
      images.push_back(chi.matrix);
    }
    std::sort(images.begin(), images.end(), lex_less);
    for (std::size_t i = 0; i < maps.size() && i < images.size(); ++i) CHECK(images[i] == maps[i].matrix);
    for (const auto& chi : maps)
      CHECK(measuring_to_algebra_map(algebra_map_to_measuring(c, dual, chi), dual).matrix == chi.matrix);
  }
}

TEST_CASE("the four characters of F3[C2] through GC2") {
  Field f = fx::F3();
  Coring gc = coalgebra_as_coring(group_coalgebra(f, 2));
  Algebra b = cyclic_group_algebra(f, 2);
  CHECK(enumerate_measurings(gc, b).size() == 4);
  DualRing dual = dual_ring(gc);
  // g -> the function with values 1 at g0 and 2 at g1
  auto one = dual_coords(dual, gc.eps());
  auto g = dual_coords(dual, Mat::from_ints(f, {{1, 2}}));
  REQUIRE(one);
  REQUIRE(g);
  AlgebraMap chi = make_algebra_map(b, dual.alg, Mat::from_cols(f, dual.alg.dim(), {*one, *g}));
  Measuring m = algebra_map_to_measuring(gc, dual, chi);
  CHECK(m.nu(0, 0 * 2 + 1) == f.from_int(1));
  CHECK(m.nu(0, 1 * 2 + 1) == f.from_int(2));
}

TEST_CASE("actions and measurings are inverse") {
  for (const auto& [name, c, b] : measuring_pairs()) {
    CAPTURE(name);
    for (const auto& m : enumerate_measurings(c, b)) {
      Mat r = action_from_measuring(m);
      CHECK(check_extension_action(c, b, r));
      CHECK(measuring_from_action(c, b, r).nu == m.nu);
      CHECK(action_from_measuring(measuring_from_action(c, b, r)) == r);
    }
  }
}

TEST_CASE("right multiplication on the second Sweedler factor") {
  Field f = fx::F2();
  Coring sw = sweedler_fixture(f);
  Algebra d2 = diagonal_algebra(f);
  Mat r = kron(I(f, 2), d2.mult());  // (a (x) a') b = a (x) a'b
  Measuring m = measuring_from_action(sw, d2, r);
  CHECK(check_measuring(m));
  CHECK(action_from_measuring(m) == r);

  // acting on the first factor breaks right B-linearity of the coproduct
  Mat wrong(f, 4, 8);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) wrong(i * 2 + j, (i * 2 + j) * 2 + i) = f.one();
  Verdict v = check_extension_action(sw, d2, wrong);
  CHECK(v.axiom == "delta-B-linearity");
  CHECK_THROWS_AS(measuring_from_action(sw, d2, wrong), AxiomViolation);
}

TEST_CASE("coring extension examples") {
  Field f = fx::F2();
  Coring sw = sweedler_fixture(f);
  Coring t = trivial_coring(diagonal_algebra(f));
  CHECK(check_coring_extension(identity_extension(sw)));
  CHECK(extension_from_coring_map(I(f, 2), t, t) == identity_extension(t));
  CoringExtension e = extension_from_coring_map(sw.eps(), sw, t);
  CHECK(check_coring_extension(e));
  CHECK(check_coring_extension(CoringExtension{sw, t, e.ract, Mat(f, 8, 4)}).axiom == "counit");
  CHECK_THROWS_AS(extension_from_coring_map(Mat(f, 2, 4), sw, t), NotCoringMorphism);
  for (const auto& [name, ext] : fx::extensions()) {
    CAPTURE(name);
    CHECK(check_coring_extension(ext));
  }
}

TEST_CASE("induced action") {
  Field f = fx::F3();
  Coring gc = coalgebra_as_coring(group_coalgebra(f, 2));
  CoringExtension to_k = extension_to_trivial(gc, ground_algebra(f), I(f, 2));
  for (const auto& [name, m] : fx::comodules(gc)) CHECK(induced_action(to_k, m) == I(f, m.dim()));

  for (const auto& [name, e] : fx::extensions()) {
    CAPTURE(name);
    Comodule reg = regular_comodule(e.c);
    CHECK(induced_action(e, reg) == e.ract);
    Bimodule sum = induced_module(e, direct_sum(reg, reg));
    Bimodule single = induced_module(e, reg);
    for (std::size_t y = 0; y < e.b().dim(); ++y)
      CHECK(sum.right_action(y) == direct_sum(single, single).right_action(y));
  }
}

TEST_CASE("induced coaction") {
  for (const auto& [name, e] : fx::extensions()) {
    CAPTURE(name);
    Comodule out = induced_coaction(e, regular_comodule(e.c));
    CHECK(out.rho_lift() == e.sigma_lift);
    CHECK(out.module().ract() == e.ract);
    for (const auto& [mname, m] : fx::comodules(e.c)) {
      CAPTURE(mname);
      Comodule fm = induced_coaction(e, m);
      CHECK(check_comodule(fm));
      CHECK(fm.dim() == m.dim());
      CHECK(fm.coring() == e.d);
    }
  }
}

TEST_CASE("extension to a trivial coring only adds the action") {
  Field f = fx::F2();
  Coring sw = sweedler_fixture(f);
  Algebra d2 = diagonal_algebra(f);
  CoringExtension e = extension_to_trivial(sw, d2, kron(I(f, 2), d2.mult()));
  for (const auto& [name, m] : fx::comodules(sw)) {
    Comodule fm = induced_coaction(e, m);
    CHECK(fm.rho_lift() == fm.mc().sect() * fm.mc().proj() * kron(I(f, m.dim()), d2.unit_col()));
  }
}

TEST_CASE("zero comodule") {
  Field f = fx::F2();
  CoringExtension e = fx::extensions()[3].e;
  std::vector<Mat> empty(e.a().dim(), Mat(f, 0, 0));
  Comodule z = make_comodule(e.c, right_module(e.a(), 0, empty), Mat(f, 0, 0));
  CHECK(induced_coaction(e, z).dim() == 0);
}

TEST_CASE("functor on morphisms") {
  for (const auto& [name, e] : fx::extensions()) {
    CAPTURE(name);
    const Coring& c = e.c;
    Comodule reg = regular_comodule(c);
    Comodule cofree = tensor_left(c.bimodule(), reg);
    CHECK(apply_functor(e, I(c.field(), c.dim()), reg, reg) == I(c.field(), c.dim()));
    CHECK(apply_functor(e, c.delta(), reg, cofree) == c.delta());
    CHECK(check_colinear(c.delta(), induced_coaction(e, reg), induced_coaction(e, cofree)));
    for (std::size_t a = 0; a < c.base().dim(); ++a)
      CHECK(check_colinear(c.bimodule().left_action(a), induced_coaction(e, reg), induced_coaction(e, reg)));
  }
  CoringExtension e = fx::extensions()[0].e;
  Comodule reg = regular_comodule(e.c);
  CHECK_THROWS_AS(apply_functor(e, e.c.bimodule().right_action(0), reg, reg), NotColinear);
}

TEST_CASE("composition of extensions") {
  Field f = fx::F2();
  Coring sw = sweedler_fixture(f);
  Coring t = trivial_coring(diagonal_algebra(f));
  CoringExtension e = extension_from_coring_map(sw.eps(), sw, t);
  CHECK(compose_extensions(identity_extension(sw), e) == e);
  CHECK(compose_extensions(e, identity_extension(t)) == e);
  CHECK(compose_extensions(e, identity_extension(t)) == extension_from_coring_map(I(f, 2) * sw.eps(), sw, t));
  CHECK_THROWS_AS(compose_extensions(identity_extension(t), e), MiddleMismatch);
}
