#include "coringlab/coring_element.hpp"

#include <sstream>

namespace coringlab {

CoringElement CoringElement::single(HKey key, AlgElement coeff) {
  CoringElement x;
  if (!coeff.is_zero()) x.terms_.emplace(key, std::move(coeff));
  return x;
}

AlgElement CoringElement::coeff(const FinAlgebra& alg, HKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? alg.zero() : it->second;
}

void CoringElement::add_term(const FinAlgebra& alg, HKey key, const AlgElement& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second = alg.add(it->second, coeff);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::strong_ordering CoringElement::operator<=>(const CoringElement& other) const {
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      // other has a zero coefficient here
      const Vector zero(a->second.size());
      auto c = compare_vectors(a->second.coeffs, zero);
      if (c != 0) return c;
      ++a;
    } else if (a == terms_.end() || b->first < a->first) {
      const Vector zero(b->second.size());
      auto c = compare_vectors(zero, b->second.coeffs);
      if (c != 0) return c;
      ++b;
    } else {
      auto c = compare_vectors(a->second.coeffs, b->second.coeffs);
      if (c != 0) return c;
      ++a;
      ++b;
    }
  }
  return std::strong_ordering::equal;
}

CoringElement add(const FinAlgebra& alg, const CoringElement& x, const CoringElement& y) {
  CoringElement out = x;
  for (const auto& [k, a] : y.terms()) out.add_term(alg, k, a);
  return out;
}

CoringElement sub(const FinAlgebra& alg, const CoringElement& x, const CoringElement& y) {
  CoringElement out = x;
  for (const auto& [k, a] : y.terms()) out.add_term(alg, k, alg.neg(a));
  return out;
}

CoringElement left_multiply(const FinAlgebra& alg, const AlgElement& a, const CoringElement& x) {
  CoringElement out;
  for (const auto& [k, c] : x.terms()) out.add_term(alg, k, alg.mul(a, c));
  return out;
}

CoringElement multiply(const FinAlgebra& alg, const HopfDesc& hopf, const CoringElement& x, const CoringElement& y) {
  CoringElement out;
  for (const auto& [h, a] : x.terms())
    for (const auto& [k, b] : y.terms())
      if (auto hk = hopf.product(h, k)) out.add_term(alg, *hk, alg.mul(a, b));
  return out;
}

CoringElement coring_one(const FinAlgebra& alg, const HopfDesc& hopf) {
  CoringElement out;
  for (HKey k : hopf.unit()) out.add_term(alg, k, alg.one());
  return out;
}

CoringElement embed_hopf(const FinAlgebra& alg, const HElement& h) {
  CoringElement out;
  for (const auto& [k, s] : h) out.add_term(alg, k, alg.scale(s, alg.one()));
  return out;
}

std::string format(const FinAlgebra& alg, const HopfDesc& hopf, const CoringElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, a] : x.terms()) {
    if (!first) out << " + ";
    first = false;
    std::string coeff = alg.format(a);
    const bool compound = coeff.find_first_of("+-", 1) != std::string::npos;
    out << (compound ? "(" + coeff + ")" : coeff) << "(x)" << hopf.key_name(k);
  }
  return out.str();
}

}  // namespace coringlab
