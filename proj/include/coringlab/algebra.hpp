#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coringlab/field.hpp"
#include "coringlab/linalg.hpp"

namespace coringlab {

// An element of a finite-dimensional algebra, by coordinates in its basis.
struct AlgElement {
  Vector coeffs;

  std::size_t size() const { return coeffs.size(); }
  bool is_zero() const;
  bool operator==(const AlgElement&) const = default;
  // Lexicographic on coordinates, 0 < 1 < ... < p-1 over F_p.
  std::strong_ordering operator<=>(const AlgElement& other) const {
    return compare_vectors(coeffs, other.coeffs);
  }
};

// Commutative unital algebra given by structure constants:
// e_i * e_j = sum_k c_{ij}^k e_k.
class FinAlgebra {
 public:
  // No law checking here; see validate_algebra.
  FinAlgebra(Field field, std::vector<std::string> basis_names, std::vector<Scalar> structure, Vector unit);

  const Field& field() const { return field_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Scalar& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return mult_[(i * dim() + j) * dim() + k];
  }
  Scalar& structure(std::size_t i, std::size_t j, std::size_t k) { return mult_[(i * dim() + j) * dim() + k]; }

  AlgElement zero() const { return AlgElement{Vector(dim())}; }
  AlgElement one() const { return AlgElement{unit_}; }
  AlgElement basis(std::size_t i) const;
  AlgElement from_ints(const std::vector<long>& coords) const;

  AlgElement add(const AlgElement& a, const AlgElement& b) const;
  AlgElement sub(const AlgElement& a, const AlgElement& b) const;
  AlgElement neg(const AlgElement& a) const;
  AlgElement scale(const Scalar& s, const AlgElement& a) const;
  // Throws DimensionError when an operand has the wrong length.
  AlgElement mul(const AlgElement& a, const AlgElement& b) const;
  AlgElement power(const AlgElement& a, unsigned exponent) const;

  // Matrix of x -> a*x in the basis.
  Matrix multiplication_matrix(const AlgElement& a) const;
  std::optional<AlgElement> try_invert(const AlgElement& a) const;
  bool is_unit(const AlgElement& a) const { return try_invert(a).has_value(); }

  std::string format(const AlgElement& a) const;

 private:
  void check(const AlgElement& a) const;

  Field field_;
  std::vector<std::string> names_;
  std::vector<Scalar> mult_;
  Vector unit_;
};

struct Violation {
  std::string law;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Commutativity, associativity and unit law on all basis triples.
ValidationReport validate_algebra(const FinAlgebra& alg);

inline constexpr std::uint64_t kDefaultElementCap = 4096;

// Number of elements p^n, or throws BoundError above `cap` (VariantError over Q).
std::uint64_t element_count(const FinAlgebra& alg, std::uint64_t cap);
// Every element of the algebra in lexicographic order.
std::vector<AlgElement> enumerate_elements(const FinAlgebra& alg, std::uint64_t cap = kDefaultElementCap);
// Every element of the F_p-span of the given vectors, in lexicographic order.
std::vector<AlgElement> enumerate_span(const FinAlgebra& alg, const std::vector<AlgElement>& generators,
                                       std::uint64_t cap = kDefaultElementCap);
std::vector<AlgElement> enumerate_units(const FinAlgebra& alg, std::uint64_t cap = kDefaultElementCap);
std::vector<AlgElement> enumerate_idempotents(const FinAlgebra& alg, std::uint64_t cap = kDefaultElementCap);
// True when there is no nonzero nilpotent (prime fields, by enumeration).
bool is_reduced(const FinAlgebra& alg, std::uint64_t cap = kDefaultElementCap);

// A subalgebra given by a basis of elements of its parent.
struct Subalgebra {
  std::vector<AlgElement> basis;
};

// Throws ValidationError unless `basis` is independent, contains 1 in its
// span and is multiplicatively closed.
Subalgebra make_subalgebra(const FinAlgebra& alg, std::vector<AlgElement> basis);
bool in_span(const FinAlgebra& alg, const std::vector<AlgElement>& basis, const AlgElement& a);

// A (x)_B A as a quotient of A (x) A.
struct TensorSquare {
  FinAlgebra algebra;
  // Pairs (i, j) whose classes e_i (x) e_j form the quotient basis.
  std::vector<std::pair<std::size_t, std::size_t>> basis_pairs;
  Matrix left;   // a -> a (x) 1, dim x n
  Matrix right;  // a -> 1 (x) a, dim x n
  // Row-reduced relation span inside the n^2-dimensional A (x) A.
  RowEchelon relations;

  // Class of the pure tensor a (x) c in quotient coordinates.
  Vector project(const FinAlgebra& base, const AlgElement& a, const AlgElement& c) const;
};

TensorSquare tensor_over_subalgebra(const FinAlgebra& alg, const Subalgebra& sub);

// Preset constructors.
FinAlgebra ground_field(const Field& field);
// k[x]/(x^k), basis 1, x, ..., x^{k-1}.
FinAlgebra truncated_polynomial(const Field& field, unsigned k);
inline FinAlgebra dual_numbers(const Field& field) { return truncated_polynomial(field, 2); }
// k^n with orthogonal idempotent basis e1..en.
FinAlgebra product_of_fields(const Field& field, unsigned n);
// k[w]/(f) for monic f given by coefficients from the constant term upward
// (the leading 1 included). Over F_p the quotient is checked to be a field.
FinAlgebra field_extension(const Field& field, const std::vector<long>& monic_poly, const std::string& variable = "w",
                           std::uint64_t cap = kDefaultElementCap);
// Matrix of the Frobenius a -> a^p on a prime-field algebra.
Matrix frobenius_matrix(const FinAlgebra& alg);

// The same algebra written in the permuted basis f_i = e_{perm[i]}.
FinAlgebra permute_basis(const FinAlgebra& alg, const std::vector<std::size_t>& perm);

}  // namespace coringlab
