#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coringlab/error.hpp"
#include "coringlab/linalg.hpp"
#include "coringlab/smith.hpp"
#include "oracles.hpp"

using namespace coringlab;

TEST_CASE("prime field arithmetic stays canonical") {
  const Field f = Field::prime(7);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_int(15) == 1);
  CHECK(f.mul(f.from_int(3), f.inv(f.from_int(3))) == 1);
  CHECK(f.parse("1/3") == f.inv(f.from_int(3)));
  CHECK(f.size() == 7);
  CHECK(f.element(4) == 4);
  CHECK_THROWS_AS(f.inv(f.zero()), DomainError);
  CHECK_THROWS_AS(f.parse("1/7"), DomainError);
  CHECK_THROWS_AS(Field::prime(9), ValidationError);
  CHECK(f.name() == "F_7");
}

TEST_CASE("rationals are exact") {
  const Field q = Field::rationals();
  const Scalar third = q.parse("1/3");
  CHECK(q.add(q.add(third, third), third) == 1);
  CHECK(q.parse("-4/6") == mpq_class(-2, 3));
  CHECK(Field::to_string(q.parse("-4/6")) == "-2/3");
  CHECK_THROWS_AS(q.size(), VariantError);
  CHECK(q.characteristic() == 0);
}

TEST_CASE("solve_linear on the identity") {
  const Field f = Field::prime(2);
  auto s = solve_linear(f, Matrix::identity(2), {1, 0});
  REQUIRE(s.particular);
  CHECK(*s.particular == Vector{1, 0});
  CHECK(s.kernel.empty());
}

TEST_CASE("solve_linear on the zero map") {
  const Field f = Field::prime(2);
  auto s = solve_linear(f, Matrix(2, 2), {0, 0});
  REQUIRE(s.particular);
  CHECK(*s.particular == Vector{0, 0});
  CHECK(s.kernel.size() == 2);
}

TEST_CASE("solve_linear reports inconsistency") {
  const Field f = Field::prime(2);
  const Matrix m = Matrix::from_rows({{1, 1}, {0, 0}});
  CHECK_FALSE(solve_linear(f, m, {1, 1}).particular);
  // Matches a scan of all four candidates.
  for (const auto& x : oracle::all_vectors(f, 2)) CHECK(apply(f, m, x) != Vector{1, 1});
  CHECK_THROWS_AS(solve_linear(f, m, {1}), DimensionError);
}

TEST_CASE("kernel bases are deterministic: one vector per free column") {
  const Field q = Field::rationals();
  const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  const auto k = kernel_basis(q, m);
  REQUIRE(k.size() == 2);
  CHECK(k[0] == Vector{-2, 1, 0});
  CHECK(k[1] == Vector{-3, 0, 1});
}

namespace {

Matrix random_matrix(std::mt19937& rng, const Field& f, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const int v = d(rng);
      m(i, j) = f.is_prime_field() ? f.from_int(v) : f.div(f.from_int(v), f.from_int(1 + (v & 1)));
    }
  return m;
}

}  // namespace

TEST_CASE("rank-nullity and exact solutions on random systems") {
  std::mt19937 rng(20240611);
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      const Matrix m = random_matrix(rng, f, r, c);
      const auto k = kernel_basis(f, m);
      CHECK(rank(f, m) + k.size() == c);
      for (const auto& v : k) {
        const Vector mv = apply(f, m, v);
        CHECK(std::all_of(mv.begin(), mv.end(), Field::is_zero));
      }
      // A right-hand side in the image is always solved exactly.
      Vector x(c);
      for (auto& s : x) s = f.from_int(static_cast<long>(rng() % 5) - 2);
      const Vector b = apply(f, m, x);
      auto sol = solve_linear(f, m, b);
      REQUIRE(sol.particular);
      CHECK(apply(f, m, *sol.particular) == b);
    }
  }
}

TEST_CASE("row_reduce pivots on the first nonzero row") {
  const Field q = Field::rationals();
  const auto e = row_reduce(q, Matrix::from_rows({{0, 2}, {3, 1}, {1, 0}}));
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced.row(0) == Vector{1, 0});
  CHECK(e.reduced.row(1) == Vector{0, 1});
  CHECK(e.reduced.row(2) == Vector{0, 0});
}

namespace {

void check_smith(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  CHECK(multiply(multiply(s.left, m), s.right) == s.diagonal);
  CHECK(abs(oracle::det(s.left)) == 1);
  CHECK(abs(oracle::det(s.right)) == 1);
  for (std::size_t i = 0; i < s.diagonal.rows(); ++i)
    for (std::size_t j = 0; j < s.diagonal.cols(); ++j)
      if (i != j) CHECK(sgn(s.diagonal(i, j)) == 0);
  const auto inv = s.invariants();
  for (std::size_t i = 0; i + 1 < inv.size(); ++i) {
    CHECK(sgn(inv[i]) >= 0);
    if (sgn(inv[i]) != 0) CHECK(inv[i + 1] % inv[i] == 0);
    if (sgn(inv[i]) == 0) CHECK(sgn(inv[i + 1]) == 0);
  }
  CHECK(inv == oracle::determinantal_invariants(m));
}

}  // namespace

TEST_CASE("Smith form of diag(2,4) is itself") {
  const IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 4}});
  CHECK(smith_normal_form(m).diagonal == m);
  check_smith(m);
}

TEST_CASE("Smith form of diag(2,3) is diag(1,6)") {
  const IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
  const SmithForm s = smith_normal_form(m);
  CHECK(s.diagonal == IntMatrix::from_rows({{1, 0}, {0, 6}}));
  check_smith(m);
}

TEST_CASE("Smith form of the zero matrix") {
  const SmithForm s = smith_normal_form(IntMatrix(2, 3));
  CHECK(s.diagonal == IntMatrix(2, 3));
  CHECK(s.left == IntMatrix::identity(2));
  CHECK(s.right == IntMatrix::identity(3));
}

TEST_CASE("Smith form on random integer matrices up to 6x6") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % 3 == 0) ? 0 : d(rng);
    check_smith(m);
  }
}

TEST_CASE("relation lattice keeps the row span") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t w = 1 + rng() % 4, n = 1 + rng() % 8;
    RelationLattice lat(w);
    IntMatrix all(n, w);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<BigInt> row(w);
      for (std::size_t j = 0; j < w; ++j) row[j] = all(i, j) = d(rng);
      lat.add(row);
    }
    const IntMatrix reduced = lat.matrix();
    CHECK(reduced.rows() <= w);
    // L1 = L1 + L2 exactly when both have the invariants of the stacked matrix.
    IntMatrix stacked(n + reduced.rows(), w);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < w; ++j) stacked(i, j) = all(i, j);
    for (std::size_t i = 0; i < reduced.rows(); ++i)
      for (std::size_t j = 0; j < w; ++j) stacked(n + i, j) = reduced(i, j);
    auto nonzero = [](std::vector<BigInt> v) {
      v.erase(std::remove_if(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) == 0; }), v.end());
      return v;
    };
    const auto both = nonzero(oracle::determinantal_invariants(stacked));
    CHECK(nonzero(oracle::determinantal_invariants(all)) == both);
    if (reduced.rows() > 0) CHECK(nonzero(oracle::determinantal_invariants(reduced)) == both);
    else CHECK(both.empty());
  }
}
