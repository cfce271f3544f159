#pragma once

#include <compare>
#include <map>
#include <string>

#include "coringlab/algebra.hpp"
#include "coringlab/hopf.hpp"

namespace coringlab {

// Element sum_h a_h (x) h of A (x) H, as a finitely supported map from basis
// keys of H to coefficients in A. Zero coefficients are never stored, so two
// elements are equal iff their maps are equal.
class CoringElement {
 public:
  CoringElement() = default;
  static CoringElement single(HKey key, AlgElement coeff);

  const std::map<HKey, AlgElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Coefficient of `key`, or the zero element of `alg`.
  AlgElement coeff(const FinAlgebra& alg, HKey key) const;
  void add_term(const FinAlgebra& alg, HKey key, const AlgElement& coeff);

  bool operator==(const CoringElement&) const = default;
  // Lexicographic on the coefficient tuple, keys ascending, absent keys zero.
  std::strong_ordering operator<=>(const CoringElement& other) const;

 private:
  std::map<HKey, AlgElement> terms_;
};

CoringElement add(const FinAlgebra& alg, const CoringElement& x, const CoringElement& y);
CoringElement sub(const FinAlgebra& alg, const CoringElement& x, const CoringElement& y);
// (a (x) 1) X.
CoringElement left_multiply(const FinAlgebra& alg, const AlgElement& a, const CoringElement& x);
// (a (x) h)(b (x) k) = ab (x) hk, extended bilinearly.
CoringElement multiply(const FinAlgebra& alg, const HopfDesc& hopf, const CoringElement& x, const CoringElement& y);
// 1_A (x) 1_H.
CoringElement coring_one(const FinAlgebra& alg, const HopfDesc& hopf);
// 1_A (x) h for an element h of H.
CoringElement embed_hopf(const FinAlgebra& alg, const HElement& h);

std::string format(const FinAlgebra& alg, const HopfDesc& hopf, const CoringElement& x);

}  // namespace coringlab
