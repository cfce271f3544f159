#include "coringlab/linalg.hpp"

#include "coringlab/error.hpp"

namespace coringlab {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RowEchelon row_reduce(const Field& field, Matrix m) {
  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && Field::is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead, c));
    const Scalar scale = field.inv(m(lead, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(lead, c) = field.mul(m(lead, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || Field::is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!Field::is_zero(m(lead, c))) m(r, c) = field.sub(m(r, c), field.mul(factor, m(lead, c)));
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Field& field, const Matrix& m) { return row_reduce(field, m).pivots.size(); }

namespace {

std::vector<Vector> kernel_from_echelon(const Field& field, const RowEchelon& ech, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      v[ech.pivots[r]] = field.neg(ech.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Vector> kernel_basis(const Field& field, const Matrix& m) {
  return kernel_from_echelon(field, row_reduce(field, m), m.cols());
}

LinearSolution solve_linear(const Field& field, const Matrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw DimensionError("right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                         std::to_string(m.rows()) + " rows");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon ech = row_reduce(field, std::move(aug));
  LinearSolution out;
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) {
    // Inconsistent: a pivot sits in the augmented column. Kernel still reported.
    ech.pivots.pop_back();
  } else {
    Vector x(m.cols());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, m.cols());
    out.particular = std::move(x);
  }
  out.kernel = kernel_from_echelon(field, ech, m.cols());
  return out;
}

Vector apply(const Field& field, const Matrix& m, const Vector& x) {
  if (x.size() != m.cols()) throw DimensionError("vector length does not match matrix columns");
  Vector y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!Field::is_zero(x[c]) && !Field::is_zero(m(r, c))) y[r] = field.add(y[r], field.mul(m(r, c), x[c]));
  return y;
}

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (Field::is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = field.add(out(i, j), field.mul(a(i, k), b(k, j)));
    }
  return out;
}

std::vector<Vector> span_basis(const Field& field, const std::vector<Vector>& vectors, std::size_t length) {
  Matrix m(vectors.size(), length);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != length) throw DimensionError("span vectors of unequal length");
    for (std::size_t c = 0; c < length; ++c) m(r, c) = vectors[r][c];
  }
  RowEchelon ech = row_reduce(field, std::move(m));
  std::vector<Vector> out;
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) out.push_back(ech.reduced.row(r));
  return out;
}

std::size_t span_rank(const Field& field, const std::vector<Vector>& vectors, std::size_t length) {
  return span_basis(field, vectors, length).size();
}

}  // namespace coringlab
