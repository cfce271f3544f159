#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "coringlab/algebra.hpp"
#include "coringlab/error.hpp"
#include "oracles.hpp"

using namespace coringlab;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

bool has_law(const ValidationReport& r, const std::string& law) {
  for (const auto& v : r.violations)
    if (v.law == law) return true;
  return false;
}

// Small algebras over F_2 and F_3 of dimension at most 4.
std::vector<FinAlgebra> desk_algebras() {
  return {ground_field(F2),
          ground_field(F3),
          dual_numbers(F2),
          dual_numbers(F3),
          truncated_polynomial(F2, 3),
          truncated_polynomial(F2, 4),
          truncated_polynomial(F3, 3),
          product_of_fields(F2, 2),
          product_of_fields(F2, 3),
          product_of_fields(F2, 4),
          product_of_fields(F3, 2),
          field_extension(F2, {1, 1, 1}),
          field_extension(F3, {2, 2, 1}),
          field_extension(F2, {1, 1, 0, 1})};
}

}  // namespace

TEST_CASE("validate_algebra accepts the dual numbers and k") {
  CHECK(validate_algebra(dual_numbers(F2)).ok());
  CHECK(validate_algebra(ground_field(F3)).ok());
  CHECK(validate_algebra(ground_field(Field::rationals())).ok());
}

TEST_CASE("validate_algebra reports a broken unit law") {
  // 1*1 = 1, 1*x = x*1 = 0, x*x = 1.
  std::vector<Scalar> c(8);
  c[(0 * 2 + 0) * 2 + 0] = 1;
  c[(1 * 2 + 1) * 2 + 0] = 1;
  const FinAlgebra bad(F2, {"1", "x"}, c, {1, 0});
  const auto rep = validate_algebra(bad);
  CHECK_FALSE(rep.ok());
  CHECK(has_law(rep, "unit"));
}

TEST_CASE("validate_algebra reports non-commutativity and non-associativity") {
  std::vector<Scalar> c(8);
  c[(0 * 2 + 0) * 2 + 0] = 1;
  c[(0 * 2 + 1) * 2 + 1] = 1;
  c[(1 * 2 + 0) * 2 + 1] = 1;
  c[(1 * 2 + 1) * 2 + 0] = 1;  // x*x = 1 is fine
  FinAlgebra a(F3, {"1", "x"}, c, {1, 0});
  CHECK(validate_algebra(a).ok());
  a.structure(1, 1, 1) = 1;  // x*x = 1 + x, still commutative and associative
  CHECK(validate_algebra(a).ok());
  a.structure(0, 1, 0) = 1;  // 1*x = 1 + x but x*1 = x
  const auto rep = validate_algebra(a);
  CHECK(has_law(rep, "commutativity"));
}

TEST_CASE("multiplication examples") {
  const FinAlgebra d = dual_numbers(F2);
  const AlgElement x = d.basis(1);
  CHECK(d.mul(d.one(), x) == x);
  CHECK(d.mul(x, x) == d.zero());
  const FinAlgebra p = product_of_fields(F2, 2);
  CHECK(p.mul(p.basis(0), p.basis(1)) == p.zero());
  CHECK_THROWS_AS(d.mul(x, AlgElement{{1, 0, 0}}), DimensionError);
}

TEST_CASE("inverse examples") {
  const FinAlgebra d = dual_numbers(F2);
  CHECK(d.try_invert(d.one()) == d.one());
  CHECK(d.try_invert(d.from_ints({1, 1})) == d.from_ints({1, 1}));
  const FinAlgebra p = product_of_fields(F2, 2);
  CHECK_FALSE(p.try_invert(p.basis(0)));
  const FinAlgebra q = dual_numbers(Field::rationals());
  const auto inv = q.try_invert(q.from_ints({2, 3}));
  REQUIRE(inv);
  CHECK(q.mul(*inv, q.from_ints({2, 3})) == q.one());
  CHECK(inv->coeffs[1] == mpq_class(-3, 4));
}

TEST_CASE("unit enumeration examples") {
  const FinAlgebra d = dual_numbers(F2);
  CHECK(enumerate_units(d) == std::vector<AlgElement>{d.one(), d.from_ints({1, 1})});
  const FinAlgebra k = ground_field(F3);
  CHECK(enumerate_units(k) == std::vector<AlgElement>{k.from_ints({1}), k.from_ints({2})});
  const FinAlgebra p = product_of_fields(F2, 2);
  CHECK(enumerate_units(p) == std::vector<AlgElement>{p.from_ints({1, 1})});
}

TEST_CASE("idempotent enumeration examples") {
  const FinAlgebra p = product_of_fields(F2, 2);
  CHECK(enumerate_idempotents(p) ==
        std::vector<AlgElement>{p.zero(), p.from_ints({0, 1}), p.from_ints({1, 0}), p.from_ints({1, 1})});
  const FinAlgebra d = dual_numbers(F2);
  CHECK(enumerate_idempotents(d) == std::vector<AlgElement>{d.zero(), d.one()});
  for (const auto& k : {ground_field(F2), ground_field(F3), field_extension(F3, {2, 2, 1})}) {
    CHECK(enumerate_idempotents(k) == std::vector<AlgElement>{k.zero(), k.one()});
  }
}

TEST_CASE("enumeration bounds and field restrictions") {
  CHECK_THROWS_AS(enumerate_elements(product_of_fields(F3, 8), 4096), BoundError);
  CHECK_THROWS_AS(enumerate_units(dual_numbers(Field::rationals())), VariantError);
  CHECK(element_count(truncated_polynomial(F2, 12), 4096) == 4096);
}

TEST_CASE("tensor products over subalgebras have the expected dimension") {
  for (const auto& a : desk_algebras()) {
    std::vector<AlgElement> all;
    for (std::size_t i = 0; i < a.dim(); ++i) all.push_back(a.basis(i));
    CHECK(tensor_over_subalgebra(a, make_subalgebra(a, all)).basis_pairs.size() == a.dim());
    CHECK(tensor_over_subalgebra(a, make_subalgebra(a, {a.one()})).basis_pairs.size() == a.dim() * a.dim());
  }
  const FinAlgebra f4 = field_extension(F2, {1, 1, 1});
  const TensorSquare t = tensor_over_subalgebra(f4, make_subalgebra(f4, {f4.one()}));
  CHECK(t.basis_pairs.size() == 4);
  CHECK(t.relations.pivots.empty());
}

TEST_CASE("subalgebra validation") {
  const FinAlgebra d = dual_numbers(F2);
  CHECK_THROWS_AS(make_subalgebra(d, {d.basis(1)}), ValidationError);
  CHECK_THROWS_AS(make_subalgebra(d, {d.one(), d.one()}), ValidationError);
  const FinAlgebra p = product_of_fields(F2, 3);
  const FinAlgebra t = truncated_polynomial(F2, 3);
  CHECK_THROWS_AS(make_subalgebra(t, {t.one(), t.basis(1)}), ValidationError);
  CHECK_NOTHROW(make_subalgebra(p, {p.one(), p.from_ints({1, 0, 0})}));
}

TEST_CASE("field extensions must be irreducible") {
  CHECK_THROWS_AS(field_extension(F2, {1, 0, 1}), ValidationError);
  CHECK_THROWS_AS(field_extension(F3, {1, 0, 2}), ValidationError);
  CHECK_NOTHROW(field_extension(F3, {1, 0, 1}));
}

TEST_CASE("formatting") {
  const FinAlgebra d = dual_numbers(F3);
  CHECK(d.format(d.from_ints({1, 2})) == "1+2*x");
  CHECK(d.format(d.zero()) == "0");
  const FinAlgebra f4 = field_extension(F2, {1, 1, 1});
  CHECK(f4.format(f4.from_ints({1, 1})) == "1+w");
}

TEST_CASE("property: structure constants are commutative, associative and unital") {
  for (const auto& a : desk_algebras()) CHECK(validate_algebra(a).ok());
}

TEST_CASE("property: enumerate_units agrees with try_invert and with an inverse scan") {
  for (const auto& a : desk_algebras()) {
    const auto units = enumerate_units(a);
    CHECK(units == oracle::units(a));
    for (const auto& x : oracle::all_elements(a)) {
      const auto inv = a.try_invert(x);
      CHECK(inv.has_value() == std::binary_search(units.begin(), units.end(), x));
      if (inv) CHECK(a.mul(x, *inv) == a.one());
    }
    CHECK(std::is_sorted(units.begin(), units.end()));
  }
}

TEST_CASE("property: idempotents are closed under e -> 1-e") {
  for (const auto& a : desk_algebras()) {
    const auto es = enumerate_idempotents(a);
    const std::set<AlgElement> set(es.begin(), es.end());
    for (const auto& e : es) {
      CHECK(oracle::mul(a, e, e) == e);
      CHECK(set.count(a.sub(a.one(), e)) == 1);
    }
  }
}

TEST_CASE("property: A tensor over A is A through multiplication") {
  for (const auto& a : desk_algebras()) {
    std::vector<AlgElement> all;
    for (std::size_t i = 0; i < a.dim(); ++i) all.push_back(a.basis(i));
    const TensorSquare t = tensor_over_subalgebra(a, make_subalgebra(a, all));
    std::vector<Vector> images;
    for (const auto& [i, j] : t.basis_pairs) images.push_back(a.mul(a.basis(i), a.basis(j)).coeffs);
    CHECK(span_rank(a.field(), images, a.dim()) == a.dim());
  }
}

TEST_CASE("property: mul agrees with the raw structure-constant expansion") {
  for (const auto& a : desk_algebras()) {
    const auto elems = oracle::all_elements(a);
    for (std::size_t i = 0; i < elems.size(); i += 3)
      for (std::size_t j = 0; j < elems.size(); j += 5) CHECK(a.mul(elems[i], elems[j]) == oracle::mul(a, elems[i], elems[j]));
  }
}

TEST_CASE("reducedness") {
  CHECK(is_reduced(product_of_fields(F2, 3)));
  CHECK(is_reduced(field_extension(F3, {2, 2, 1})));
  CHECK_FALSE(is_reduced(dual_numbers(F2)));
}
