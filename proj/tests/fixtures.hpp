#pragma once

// Shared corpus of algebras, corings, extensions, comodules and tower data.

#include <string>
#include <vector>

#include "crg/constructions.hpp"
#include "crg/descent.hpp"
#include "crg/extension.hpp"

namespace fx {

using namespace crg;

inline Field F2() { return Field::prime(2); }
inline Field F3() { return Field::prime(3); }
inline Mat I(Field f, std::size_t n) { return Mat::identity(f, n); }

inline std::vector<Algebra> algebras(Field f) {
  return {ground_algebra(f), diagonal_algebra(f), cyclic_group_algebra(f, 2), upper_triangular_algebra(f),
          matrix_algebra(f, 2)};
}

// D2 as a (k, D2)-bimodule with the coordinate dual basis.
inline Bimodule sigma_d2(Field f) { return forget_left(regular_bimodule(diagonal_algebra(f))); }
inline DualBasis coordinate_dual_basis(Field f) {
  return DualBasis{{unit_vec(f, 2, 0), unit_vec(f, 2, 1)},
                   {Mat::from_ints(f, {{1, 0}, {0, 0}}), Mat::from_ints(f, {{0, 0}, {0, 1}})}};
}

// Tower k -> k -> D2 with rho_A the scalar action.
inline Cor28Data cor28_data(Field f, const Mat& phi) {
  Algebra d2 = diagonal_algebra(f);
  return Cor28Data{identity_map(ground_algebra(f)), unit_map(d2), I(f, 2), phi};
}
// a -> 1 (x) a (x) 1
inline Cor28Data cor28_good(Field f) { return cor28_data(f, kron(diagonal_algebra(f).unit_col(), I(f, 2))); }
// a -> a (x) 1 (x) 1
inline Cor28Data cor28_left_unit(Field f) { return cor28_data(f, kron(I(f, 2), diagonal_algebra(f).unit_col())); }
inline Cor28Data cor28_zero(Field f) { return cor28_data(f, Mat(f, 4, 2)); }
// D = B = A = D2
inline Cor28Data cor28_collapse(Field f) {
  Algebra d2 = diagonal_algebra(f);
  return Cor28Data{identity_map(d2), identity_map(d2), d2.mult(), kron(kron(d2.unit_col(), d2.unit_col()), I(f, 2))};
}

inline CoringExtension cor28_extension(const Cor28Data& d) {
  CoringExtension raw = assemble_cor28(d);
  return make_coring_extension(raw.c, raw.d, raw.ract, raw.sigma_lift);
}

struct NamedExtension {
  std::string name;
  CoringExtension e;
};

inline std::vector<NamedExtension> extensions() {
  const Field f = F2();
  Coring sw = sweedler_fixture(f);
  Coring t = trivial_coring(diagonal_algebra(f));
  return {
      {"id(SW)", identity_extension(sw)},
      {"id(T_D2)", identity_extension(t)},
      {"id(GC2)", identity_extension(coalgebra_as_coring(group_coalgebra(F3(), 2)))},
      {"eps: SW -> T_D2", extension_from_coring_map(sw.eps(), sw, t)},
      {"tower k -> k -> D2", cor28_extension(cor28_good(f))},
      {"tower D2 -> D2 -> D2", cor28_extension(cor28_collapse(f))},
  };
}

// One-dimensional right module through the first character A -> k; A itself
// when there is none.
inline Bimodule character_module(const Algebra& a) {
  const Field f = a.field();
  auto chars = enumerate_algebra_maps(a, ground_algebra(f));
  if (chars.empty()) return forget_left(regular_bimodule(a));
  const AlgebraMap& chi = chars.front();
  std::vector<Mat> acts;
  for (std::size_t x = 0; x < a.dim(); ++x) acts.push_back(Mat::from_rows(f, 1, {{chi.matrix(0, x)}}));
  return right_module(a, 1, acts);
}

struct NamedComodule {
  std::string name;
  Comodule m;
};

inline std::vector<NamedComodule> comodules(const Coring& c) {
  Comodule reg = regular_comodule(c);
  return {{"C", reg},
          {"C+C", direct_sum(reg, reg)},
          {"N(x)C", tensor_left(character_module(c.base()), reg)}};
}

}  // namespace fx
