#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coringlab/field.hpp"

namespace coringlab {

// Dense row-major matrix of field scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  // Throws DimensionError on ragged input.
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row, increasing
};

// Gauss-Jordan elimination. The pivot of each column is the first row (in
// order) holding a nonzero entry there.
RowEchelon row_reduce(const Field& field, Matrix m);
std::size_t rank(const Field& field, const Matrix& m);
// Basis of {x : m x = 0}, one vector per free column, in free-column order.
std::vector<Vector> kernel_basis(const Field& field, const Matrix& m);

struct LinearSolution {
  std::optional<Vector> particular;  // absent means the system is inconsistent
  std::vector<Vector> kernel;
};

// Solves m x = b. Throws DimensionError when b does not have m.rows() entries.
LinearSolution solve_linear(const Field& field, const Matrix& m, const Vector& b);

Vector apply(const Field& field, const Matrix& m, const Vector& x);
Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);

// Rank of a list of vectors of equal length.
std::size_t span_rank(const Field& field, const std::vector<Vector>& vectors, std::size_t length);
// Reduced basis of the span of the given vectors.
std::vector<Vector> span_basis(const Field& field, const std::vector<Vector>& vectors, std::size_t length);

}  // namespace coringlab
