#include "coringlab/field.hpp"

#include <sstream>

#include "coringlab/error.hpp"

namespace coringlab {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

Field Field::prime(long p) {
  if (!is_prime(p))
    throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  return Field(FieldKind::PrimeField, p);
}

Scalar Field::reduce(const BigInt& v) const {
  BigInt r = v % p_;
  if (r < 0) r += p_;
  return Scalar(r);
}

Scalar Field::from_int(long v) const { return from_big(BigInt(v)); }

Scalar Field::from_big(const BigInt& v) const {
  if (kind_ == FieldKind::Rationals) return Scalar(v);
  return reduce(v);
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (kind_ == FieldKind::Rationals) {
    Scalar r(v);
    r.canonicalize();
    return r;
  }
  Scalar den = reduce(v.get_den());
  if (is_zero(den))
    throw DomainError("denominator " + v.get_den().get_str() + " vanishes in " + name());
  return mul(reduce(v.get_num()), inv(den));
}

Scalar Field::parse(const std::string& text) const {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw ValidationError("not a scalar: '" + text + "'");
  q.canonicalize();
  return from_rational(q);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rationals) return a + b;
  BigInt s = a.get_num() + b.get_num();
  if (s >= p_) s -= p_;
  return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rationals) return a - b;
  BigInt s = a.get_num() - b.get_num();
  if (s < 0) s += p_;
  return Scalar(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rationals) return a * b;
  return reduce(a.get_num() * b.get_num());
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == FieldKind::Rationals) return -a;
  if (is_zero(a)) return a;
  return Scalar(BigInt(p_) - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw DomainError("division by zero in " + name());
  if (kind_ == FieldKind::Rationals) return 1 / a;
  BigInt r;
  BigInt modulus(p_);
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), modulus.get_mpz_t());
  return Scalar(r);
}

std::uint64_t Field::size() const {
  if (kind_ == FieldKind::Rationals) throw VariantError("the rationals are infinite");
  return static_cast<std::uint64_t>(p_);
}

Scalar Field::element(std::uint64_t i) const { return Scalar(BigInt(static_cast<unsigned long>(i))); }

std::string Field::name() const {
  if (kind_ == FieldKind::Rationals) return "Q";
  return "F_" + std::to_string(p_);
}

std::string Field::to_string(const Scalar& a) { return a.get_str(); }

std::strong_ordering compare_vectors(const Vector& a, const Vector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

}  // namespace coringlab
