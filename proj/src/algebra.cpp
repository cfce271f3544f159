#include "coringlab/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "coringlab/error.hpp"

namespace coringlab {

bool AlgElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return Field::is_zero(s); });
}

FinAlgebra::FinAlgebra(Field field, std::vector<std::string> basis_names, std::vector<Scalar> structure, Vector unit)
    : field_(field), names_(std::move(basis_names)), mult_(std::move(structure)), unit_(std::move(unit)) {
  const std::size_t n = names_.size();
  if (n == 0) throw DimensionError("algebra must have positive dimension");
  if (mult_.size() != n * n * n)
    throw DimensionError("expected " + std::to_string(n * n * n) + " structure constants, got " +
                         std::to_string(mult_.size()));
  if (unit_.size() != n) throw DimensionError("unit vector has wrong length");
  for (auto& s : mult_) s = field_.from_rational(s);
  for (auto& s : unit_) s = field_.from_rational(s);
}

void FinAlgebra::check(const AlgElement& a) const {
  if (a.size() != dim())
    throw DimensionError("element of length " + std::to_string(a.size()) + " in algebra of dimension " +
                         std::to_string(dim()));
}

AlgElement FinAlgebra::basis(std::size_t i) const {
  AlgElement e = zero();
  e.coeffs.at(i) = 1;
  return e;
}

AlgElement FinAlgebra::from_ints(const std::vector<long>& coords) const {
  if (coords.size() != dim()) throw DimensionError("coordinate list has wrong length");
  AlgElement e = zero();
  for (std::size_t i = 0; i < dim(); ++i) e.coeffs[i] = field_.from_int(coords[i]);
  return e;
}

AlgElement FinAlgebra::add(const AlgElement& a, const AlgElement& b) const {
  check(a);
  check(b);
  AlgElement r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = field_.add(a.coeffs[i], b.coeffs[i]);
  return r;
}

AlgElement FinAlgebra::sub(const AlgElement& a, const AlgElement& b) const {
  check(a);
  check(b);
  AlgElement r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = field_.sub(a.coeffs[i], b.coeffs[i]);
  return r;
}

AlgElement FinAlgebra::neg(const AlgElement& a) const {
  check(a);
  AlgElement r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = field_.neg(a.coeffs[i]);
  return r;
}

AlgElement FinAlgebra::scale(const Scalar& s, const AlgElement& a) const {
  check(a);
  AlgElement r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = field_.mul(s, a.coeffs[i]);
  return r;
}

AlgElement FinAlgebra::mul(const AlgElement& a, const AlgElement& b) const {
  check(a);
  check(b);
  const std::size_t n = dim();
  AlgElement r = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (Field::is_zero(a.coeffs[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (Field::is_zero(b.coeffs[j])) continue;
      const Scalar ab = field_.mul(a.coeffs[i], b.coeffs[j]);
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = structure(i, j, k);
        if (!Field::is_zero(c)) r.coeffs[k] = field_.add(r.coeffs[k], field_.mul(ab, c));
      }
    }
  }
  return r;
}

AlgElement FinAlgebra::power(const AlgElement& a, unsigned exponent) const {
  AlgElement result = one();
  AlgElement base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1U;
  }
  return result;
}

Matrix FinAlgebra::multiplication_matrix(const AlgElement& a) const {
  check(a);
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    AlgElement col = mul(a, basis(j));
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col.coeffs[k];
  }
  return m;
}

std::optional<AlgElement> FinAlgebra::try_invert(const AlgElement& a) const {
  LinearSolution sol = solve_linear(field_, multiplication_matrix(a), unit_);
  if (!sol.particular || !sol.kernel.empty()) return std::nullopt;
  return AlgElement{*sol.particular};
}

std::string FinAlgebra::format(const AlgElement& a) const {
  check(a);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar& c = a.coeffs[i];
    if (Field::is_zero(c)) continue;
    std::string coeff = Field::to_string(c);
    if (!first) {
      if (!coeff.empty() && coeff[0] == '-') {
        out << "-";
        coeff.erase(0, 1);
      } else {
        out << "+";
      }
    } else if (!coeff.empty() && coeff[0] == '-') {
      out << "-";
      coeff.erase(0, 1);
    }
    first = false;
    const std::string& name = names_[i];
    if (name == "1")
      out << coeff;
    else if (coeff == "1")
      out << name;
    else
      out << coeff << "*" << name;
  }
  if (first) return "0";
  return out.str();
}

ValidationReport validate_algebra(const FinAlgebra& alg) {
  ValidationReport report;
  const Field& f = alg.field();
  const std::size_t n = alg.dim();
  auto idx = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (alg.structure(i, j, k) != alg.structure(j, i, k)) {
          report.violations.push_back({"commutativity", "c_" + idx(i, j) + "^" + std::to_string(k) + " != c_" +
                                                            idx(j, i) + "^" + std::to_string(k)});
          goto commutativity_done;
        }
commutativity_done:
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        AlgElement lhs = alg.mul(alg.mul(alg.basis(i), alg.basis(j)), alg.basis(k));
        AlgElement rhs = alg.mul(alg.basis(i), alg.mul(alg.basis(j), alg.basis(k)));
        if (lhs != rhs) {
          report.violations.push_back({"associativity", "(e" + std::to_string(i) + "*e" + std::to_string(j) + ")*e" +
                                                            std::to_string(k) + " != e" + std::to_string(i) + "*(e" +
                                                            std::to_string(j) + "*e" + std::to_string(k) + ")"});
          goto associativity_done;
        }
      }
associativity_done:
  for (std::size_t i = 0; i < n; ++i) {
    if (alg.mul(alg.one(), alg.basis(i)) != alg.basis(i)) {
      report.violations.push_back({"unit", "1*e" + std::to_string(i) + " != e" + std::to_string(i)});
      break;
    }
  }
  (void)f;
  return report;
}

std::uint64_t element_count(const FinAlgebra& alg, std::uint64_t cap) {
  if (!alg.field().is_prime_field()) throw VariantError("element enumeration needs a prime field");
  const std::uint64_t p = alg.field().size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (count > cap / p) throw BoundError("algebra has more than " + std::to_string(cap) + " elements");
    count *= p;
  }
  if (count > cap) throw BoundError("algebra has more than " + std::to_string(cap) + " elements");
  return count;
}

namespace {

// Coordinate tuples over F_p of the given length, lexicographic order.
std::vector<Vector> coordinate_tuples(const Field& f, std::size_t length, std::uint64_t count) {
  std::vector<Vector> out;
  out.reserve(count);
  std::vector<std::uint64_t> digits(length, 0);
  const std::uint64_t p = f.size();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Vector v(length);
    for (std::size_t i = 0; i < length; ++i) v[i] = f.element(digits[i]);
    out.push_back(std::move(v));
    for (std::size_t i = length; i-- > 0;) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return out;
}

}  // namespace

std::vector<AlgElement> enumerate_elements(const FinAlgebra& alg, std::uint64_t cap) {
  const std::uint64_t count = element_count(alg, cap);
  std::vector<AlgElement> out;
  for (auto& v : coordinate_tuples(alg.field(), alg.dim(), count)) out.push_back(AlgElement{std::move(v)});
  return out;
}

std::vector<AlgElement> enumerate_span(const FinAlgebra& alg, const std::vector<AlgElement>& generators,
                                       std::uint64_t cap) {
  const Field& f = alg.field();
  if (!f.is_prime_field()) throw VariantError("span enumeration needs a prime field");
  std::vector<Vector> gens;
  for (const auto& g : generators) gens.push_back(g.coeffs);
  std::vector<Vector> basis = span_basis(f, gens, alg.dim());
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (count > cap / f.size()) throw BoundError("span has more than " + std::to_string(cap) + " elements");
    count *= f.size();
  }
  std::vector<AlgElement> out;
  for (const auto& combo : coordinate_tuples(f, basis.size(), count)) {
    AlgElement e = alg.zero();
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!Field::is_zero(combo[i])) e = alg.add(e, alg.scale(combo[i], AlgElement{basis[i]}));
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AlgElement> enumerate_units(const FinAlgebra& alg, std::uint64_t cap) {
  std::vector<AlgElement> out;
  for (auto& a : enumerate_elements(alg, cap))
    if (alg.is_unit(a)) out.push_back(std::move(a));
  return out;
}

std::vector<AlgElement> enumerate_idempotents(const FinAlgebra& alg, std::uint64_t cap) {
  std::vector<AlgElement> out;
  for (auto& a : enumerate_elements(alg, cap))
    if (alg.mul(a, a) == a) out.push_back(std::move(a));
  return out;
}

bool is_reduced(const FinAlgebra& alg, std::uint64_t cap) {
  for (const auto& a : enumerate_elements(alg, cap)) {
    if (a.is_zero()) continue;
    if (alg.power(a, static_cast<unsigned>(alg.dim())).is_zero()) return false;
  }
  return true;
}

bool in_span(const FinAlgebra& alg, const std::vector<AlgElement>& basis, const AlgElement& a) {
  std::vector<Vector> vs;
  for (const auto& b : basis) vs.push_back(b.coeffs);
  const std::size_t r = span_rank(alg.field(), vs, alg.dim());
  vs.push_back(a.coeffs);
  return span_rank(alg.field(), vs, alg.dim()) == r;
}

Subalgebra make_subalgebra(const FinAlgebra& alg, std::vector<AlgElement> basis) {
  std::vector<Vector> vs;
  for (const auto& b : basis) vs.push_back(b.coeffs);
  if (span_rank(alg.field(), vs, alg.dim()) != basis.size())
    throw ValidationError("subalgebra basis is linearly dependent");
  if (!in_span(alg, basis, alg.one())) throw ValidationError("subalgebra does not contain the unit");
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (!in_span(alg, basis, alg.mul(basis[i], basis[j])))
        throw ValidationError("subalgebra is not closed under multiplication: b" + std::to_string(i) + "*b" +
                              std::to_string(j));
  return Subalgebra{std::move(basis)};
}

Vector TensorSquare::project(const FinAlgebra& base, const AlgElement& a, const AlgElement& c) const {
  const Field& f = base.field();
  const std::size_t n = base.dim();
  Vector full(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (Field::is_zero(a.coeffs[i])) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!Field::is_zero(c.coeffs[j])) full[i * n + j] = f.mul(a.coeffs[i], c.coeffs[j]);
  }
  for (std::size_t r = 0; r < relations.pivots.size(); ++r) {
    const std::size_t piv = relations.pivots[r];
    if (Field::is_zero(full[piv])) continue;
    const Scalar factor = full[piv];
    for (std::size_t col = 0; col < n * n; ++col)
      if (!Field::is_zero(relations.reduced(r, col)))
        full[col] = f.sub(full[col], f.mul(factor, relations.reduced(r, col)));
  }
  Vector out;
  out.reserve(basis_pairs.size());
  for (const auto& [i, j] : basis_pairs) out.push_back(full[i * n + j]);
  return out;
}

TensorSquare tensor_over_subalgebra(const FinAlgebra& alg, const Subalgebra& sub) {
  const Field& f = alg.field();
  const std::size_t n = alg.dim();
  // Re-check closure so that a hand-built Subalgebra is rejected too.
  make_subalgebra(alg, sub.basis);

  std::vector<Vector> rels;
  for (const auto& b : sub.basis)
    for (std::size_t i = 0; i < n; ++i) {
      const AlgElement bi = alg.mul(b, alg.basis(i));
      for (std::size_t j = 0; j < n; ++j) {
        const AlgElement bj = alg.mul(b, alg.basis(j));
        Vector v(n * n);
        for (std::size_t k = 0; k < n; ++k) {
          v[k * n + j] = f.add(v[k * n + j], bi.coeffs[k]);
          v[i * n + k] = f.sub(v[i * n + k], bj.coeffs[k]);
        }
        rels.push_back(std::move(v));
      }
    }
  Matrix relmat(rels.size(), n * n);
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) relmat(r, c) = rels[r][c];
  RowEchelon ech = row_reduce(f, std::move(relmat));

  std::vector<bool> pivot(n * n, false);
  for (auto p : ech.pivots) pivot[p] = true;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t idx = 0; idx < n * n; ++idx)
    if (!pivot[idx]) pairs.emplace_back(idx / n, idx % n);

  // Assemble the quotient with placeholder structure, then fill it in.
  const std::size_t m = pairs.size();
  std::vector<std::string> names;
  for (const auto& [i, j] : pairs) names.push_back(alg.basis_names()[i] + "(x)" + alg.basis_names()[j]);
  TensorSquare out{FinAlgebra(f, names, std::vector<Scalar>(m * m * m), Vector(m)), pairs, Matrix(m, n), Matrix(m, n),
                   std::move(ech)};
  std::vector<Scalar> structure(m * m * m);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      const AlgElement left = alg.mul(alg.basis(pairs[s].first), alg.basis(pairs[t].first));
      const AlgElement right = alg.mul(alg.basis(pairs[s].second), alg.basis(pairs[t].second));
      Vector prod = out.project(alg, left, right);
      for (std::size_t k = 0; k < m; ++k) structure[(s * m + t) * m + k] = prod[k];
    }
  Vector unit = out.project(alg, alg.one(), alg.one());
  out.algebra = FinAlgebra(f, std::move(names), std::move(structure), std::move(unit));
  for (std::size_t c = 0; c < n; ++c) {
    Vector l = out.project(alg, alg.basis(c), alg.one());
    Vector r = out.project(alg, alg.one(), alg.basis(c));
    for (std::size_t k = 0; k < m; ++k) {
      out.left(k, c) = l[k];
      out.right(k, c) = r[k];
    }
  }
  return out;
}

FinAlgebra ground_field(const Field& field) { return FinAlgebra(field, {"1"}, {Scalar(1)}, {Scalar(1)}); }

FinAlgebra truncated_polynomial(const Field& field, unsigned k) {
  if (k == 0) throw ValidationError("k[x]/(x^k) needs k >= 1");
  std::vector<std::string> names;
  for (unsigned i = 0; i < k; ++i) names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  std::vector<Scalar> c(k * k * k);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      if (i + j < k) c[(i * k + j) * k + i + j] = 1;
  Vector unit(k);
  unit[0] = 1;
  return FinAlgebra(field, std::move(names), std::move(c), std::move(unit));
}

FinAlgebra product_of_fields(const Field& field, unsigned n) {
  if (n == 0) throw ValidationError("product of zero fields");
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  std::vector<Scalar> c(n * n * n);
  for (unsigned i = 0; i < n; ++i) c[(i * n + i) * n + i] = 1;
  return FinAlgebra(field, std::move(names), std::move(c), Vector(n, Scalar(1)));
}

FinAlgebra field_extension(const Field& field, const std::vector<long>& monic_poly, const std::string& variable,
                           std::uint64_t cap) {
  if (monic_poly.size() < 2) throw ValidationError("extension polynomial must have degree >= 1");
  const std::size_t n = monic_poly.size() - 1;
  if (field.from_int(monic_poly.back()) != field.one()) throw ValidationError("extension polynomial must be monic");
  // powers[t] = w^t reduced modulo f, for t < 2n - 1.
  std::vector<Vector> powers;
  Vector cur(n);
  cur[0] = 1;
  for (std::size_t t = 0; t + 1 < 2 * n; ++t) {
    powers.push_back(cur);
    Vector next(n);
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] = cur[i];
    const Scalar top = n >= 1 ? cur[n - 1] : Scalar(0);
    if (!Field::is_zero(top))
      for (std::size_t i = 0; i < n; ++i)
        next[i] = field.sub(next[i], field.mul(top, field.from_int(monic_poly[i])));
    cur = std::move(next);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(i == 0 ? "1" : (i == 1 ? variable : variable + "^" + std::to_string(i)));
  std::vector<Scalar> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = powers[i + j][k];
  Vector unit(n);
  unit[0] = 1;
  FinAlgebra alg(field, std::move(names), std::move(c), std::move(unit));
  if (field.is_prime_field()) {
    for (const auto& a : enumerate_elements(alg, cap))
      if (!a.is_zero() && !alg.is_unit(a))
        throw ValidationError("extension polynomial is reducible: " + alg.format(a) + " is a zero divisor");
  }
  return alg;
}

Matrix frobenius_matrix(const FinAlgebra& alg) {
  if (!alg.field().is_prime_field()) throw VariantError("Frobenius needs a prime field");
  const auto p = static_cast<unsigned>(alg.field().characteristic());
  Matrix m(alg.dim(), alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    AlgElement col = alg.power(alg.basis(j), p);
    for (std::size_t k = 0; k < alg.dim(); ++k) m(k, j) = col.coeffs[k];
  }
  return m;
}

FinAlgebra permute_basis(const FinAlgebra& alg, const std::vector<std::size_t>& perm) {
  const std::size_t n = alg.dim();
  if (perm.size() != n) throw DimensionError("permutation has wrong length");
  std::vector<std::string> names(n);
  std::vector<Scalar> c(n * n * n);
  Vector unit(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = alg.basis_names()[perm[i]];
    unit[i] = alg.one().coeffs[perm[i]];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = alg.structure(perm[i], perm[j], perm[k]);
  }
  return FinAlgebra(alg.field(), std::move(names), std::move(c), std::move(unit));
}

}  // namespace coringlab
