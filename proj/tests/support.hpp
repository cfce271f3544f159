#pragma once

#include <string>

#include "coringlab/cohomology.hpp"
#include "coringlab/instance.hpp"

namespace fixtures {

using namespace coringlab;

inline std::string path(const std::string& name) { return std::string(CORINGLAB_INSTANCE_DIR) + "/" + name; }

inline CoringCtx frobenius(long p, std::vector<long> poly) {
  const Field f = Field::prime(p);
  FinAlgebra a = field_extension(f, poly);
  HopfDesc h = make_dual_group_hopf(f, GroupSpec::cyclic(2));
  return CoringCtx{coaction_from_action(a, h, {Matrix::identity(a.dim()), frobenius_matrix(a)})};
}
inline CoringCtx f4() { return frobenius(2, {1, 1, 1}); }
inline CoringCtx f9() { return frobenius(3, {2, 2, 1}); }

inline CoringCtx trivial_action(const FinAlgebra& a, unsigned order) {
  HopfDesc h = make_dual_group_hopf(a.field(), GroupSpec::cyclic(order));
  return CoringCtx{coaction_from_action(a, h, std::vector<Matrix>(order, Matrix::identity(a.dim())))};
}
inline CoringCtx f3_trivial() { return trivial_action(ground_field(Field::prime(3)), 2); }

inline CoringCtx z_graded(const FinAlgebra& a, std::vector<HKey> degrees) {
  return CoringCtx{coaction_from_grading(a, make_group_basis_hopf(a.field(), GroupSpec::integers()), std::move(degrees))};
}
inline CoringCtx dual_numbers_graded(long p = 2) { return z_graded(dual_numbers(Field::prime(p)), {0, 1}); }
inline CoringCtx product_graded(unsigned n) {
  return z_graded(product_of_fields(Field::prime(2), n), std::vector<HKey>(n, 0));
}

inline CoringCtx swap_c2() {
  const Field f = Field::prime(2);
  FinAlgebra a = product_of_fields(f, 2);
  HopfDesc h = make_dual_group_hopf(f, GroupSpec::cyclic(2));
  return CoringCtx{coaction_from_action(a, h, {Matrix::identity(2), Matrix::from_rows({{0, 1}, {1, 0}})})};
}

inline EnumerationBounds window(std::int64_t lo, std::int64_t hi) {
  EnumerationBounds b;
  b.window = {lo, hi};
  return b;
}

inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names = {
      "f4_frobenius.json",   "f9_frobenius.json",        "f3_trivial_c2.json",   "f2xf2_swap_c2.json",
      "trivial_c1.json",     "dualnumbers_graded.json",  "dualnumbers_f3_graded.json",
      "f2xf2_graded.json",   "f2xf2xf2_graded.json",     "c2graded_f3.json"};
  return names;
}

}  // namespace fixtures
