#include "coringlab/smith.hpp"

#include "coringlab/error.hpp"

namespace coringlab {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw DimensionError("ragged integer matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("integer matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<BigInt> SmithForm::invariants() const {
  std::vector<BigInt> out;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(diagonal(i, i));
  return out;
}

namespace {

struct Reducer {
  IntMatrix s, u, v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < s.cols(); ++c) std::swap(s(a, c), s(b, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(a, c), u(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < s.rows(); ++r) std::swap(s(r, a), s(r, b));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, a), v(r, b));
  }
  // row[target] -= q * row[source]
  void add_row(std::size_t target, std::size_t source, const BigInt& q) {
    for (std::size_t c = 0; c < s.cols(); ++c) s(target, c) -= q * s(source, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(target, c) -= q * u(source, c);
  }
  void add_col(std::size_t target, std::size_t source, const BigInt& q) {
    for (std::size_t r = 0; r < s.rows(); ++r) s(r, target) -= q * s(r, source);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, target) -= q * v(r, source);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < s.cols(); ++c) s(r, c) = -s(r, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(r, c) = -u(r, c);
  }

  bool find_min(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    BigInt best;
    for (std::size_t r = t; r < s.rows(); ++r)
      for (std::size_t c = t; c < s.cols(); ++c) {
        if (sgn(s(r, c)) == 0) continue;
        BigInt a = abs(s(r, c));
        if (!found || a < best) {
          best = a;
          pr = r;
          pc = c;
          found = true;
        }
      }
    return found;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Reducer red{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!red.find_min(t, pr, pc)) break;
    red.swap_rows(t, pr);
    red.swap_cols(t, pc);
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (sgn(red.s(r, t)) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), red.s(r, t).get_mpz_t(), red.s(t, t).get_mpz_t());
        red.add_row(r, t, q);
        if (sgn(red.s(r, t)) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (sgn(red.s(t, c)) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), red.s(t, c).get_mpz_t(), red.s(t, t).get_mpz_t());
        red.add_col(c, t, q);
        if (sgn(red.s(t, c)) != 0) clean = false;
      }
      if (clean) {
        // Enforce divisibility: fold an offending row into the pivot row.
        bool divides = true;
        for (std::size_t r = t + 1; r < m.rows() && divides; ++r)
          for (std::size_t c = t + 1; c < m.cols(); ++c)
            if (sgn(red.s(r, c) % red.s(t, t)) != 0) {
              red.add_row(t, r, BigInt(-1));
              divides = false;
              break;
            }
        if (divides) break;
      }
      // Move the smallest remaining entry of row/column t into the pivot.
      std::size_t br = t, bc = t;
      BigInt best = abs(red.s(t, t));
      for (std::size_t r = t + 1; r < m.rows(); ++r)
        if (sgn(red.s(r, t)) != 0 && abs(red.s(r, t)) < best) {
          best = abs(red.s(r, t));
          br = r;
          bc = t;
        }
      for (std::size_t c = t + 1; c < m.cols(); ++c)
        if (sgn(red.s(t, c)) != 0 && abs(red.s(t, c)) < best) {
          best = abs(red.s(t, c));
          br = t;
          bc = c;
        }
      red.swap_rows(t, br);
      red.swap_cols(t, bc);
    }
    if (sgn(red.s(t, t)) < 0) red.negate_row(t);
  }
  return SmithForm{std::move(red.s), std::move(red.u), std::move(red.v)};
}

void RelationLattice::add(std::vector<BigInt> row) {
  if (row.size() != width_) throw DimensionError("relation row has wrong width");
  for (;;) {
    std::size_t lead = 0;
    while (lead < width_ && sgn(row[lead]) == 0) ++lead;
    if (lead == width_) return;
    auto it = rows_.find(lead);
    if (it == rows_.end()) {
      if (sgn(row[lead]) < 0)
        for (auto& x : row) x = -x;
      rows_.emplace(lead, std::move(row));
      return;
    }
    std::vector<BigInt>& pivot = it->second;
    const BigInt a = pivot[lead];
    const BigInt b = row[lead];
    BigInt g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const BigInt pa = a / g;
    const BigInt pb = b / g;
    std::vector<BigInt> combined(width_), rest(width_);
    for (std::size_t c = 0; c < width_; ++c) {
      combined[c] = s * pivot[c] + t * row[c];
      rest[c] = pa * row[c] - pb * pivot[c];
    }
    if (sgn(combined[lead]) < 0)
      for (auto& x : combined) x = -x;
    pivot = std::move(combined);
    row = std::move(rest);
  }
}

IntMatrix RelationLattice::matrix() const {
  IntMatrix m(rows_.size(), width_);
  std::size_t r = 0;
  for (const auto& [lead, row] : rows_) {
    for (std::size_t c = 0; c < width_; ++c) m(r, c) = row[c];
    ++r;
  }
  return m;
}

}  // namespace coringlab
