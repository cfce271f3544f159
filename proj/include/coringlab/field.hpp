#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace coringlab {

using BigInt = mpz_class;

// Field scalars are rationals in canonical form. Over a prime field the value
// is always an integer in [0, p).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

enum class FieldKind { Rationals, PrimeField };

// The exact base field: either Q or F_p.
class Field {
 public:
  static Field rationals();
  // Throws ValidationError unless p is prime.
  static Field prime(long p);

  FieldKind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }
  // 0 for the rationals.
  long characteristic() const { return p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const;
  Scalar from_big(const BigInt& v) const;
  // Throws DomainError when the denominator vanishes in F_p.
  Scalar from_rational(const mpq_class& v) const;
  // Accepts "3", "-2", "1/3".
  Scalar parse(const std::string& text) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  // Throws DomainError on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  // Number of elements of F_p; throws VariantError over Q.
  std::uint64_t size() const;
  // The i-th element of F_p in the order 0 < 1 < ... < p-1.
  Scalar element(std::uint64_t i) const;

  std::string name() const;
  static std::string to_string(const Scalar& a);

  bool operator==(const Field& other) const = default;

 private:
  Field(FieldKind kind, long p) : kind_(kind), p_(p) {}
  Scalar reduce(const BigInt& v) const;

  FieldKind kind_;
  long p_;
};

bool is_prime(long n);

// Lexicographic comparison of coordinate vectors (first coordinate most significant).
std::strong_ordering compare_vectors(const Vector& a, const Vector& b);

}  // namespace coringlab
