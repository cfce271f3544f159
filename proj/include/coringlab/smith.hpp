#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "coringlab/field.hpp"

namespace coringlab {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SmithForm {
  IntMatrix diagonal;  // S, same shape as the input
  IntMatrix left;      // U, unimodular, rows x rows
  IntMatrix right;     // V, unimodular, cols x cols
  // Nonnegative diagonal entries d_1 | d_2 | ... (zeros last).
  std::vector<BigInt> invariants() const;
};

// S = U * M * V by elementary row and column operations, pivoting on the
// entry of least nonzero absolute value.
SmithForm smith_normal_form(const IntMatrix& m);

// Accumulates integer relation rows in echelon form so that a long stream of
// relations is stored in at most `width` rows. The row span is preserved.
class RelationLattice {
 public:
  explicit RelationLattice(std::size_t width) : width_(width) {}
  void add(std::vector<BigInt> row);
  std::size_t width() const { return width_; }
  IntMatrix matrix() const;

 private:
  std::size_t width_;
  std::map<std::size_t, std::vector<BigInt>> rows_;  // keyed by pivot column
};

}  // namespace coringlab
