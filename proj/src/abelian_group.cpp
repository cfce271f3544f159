#include "coringlab/abelian_group.hpp"

#include <sstream>

namespace coringlab {

std::size_t AbGroupPresentation::free_rank() const {
  return static_cast<std::size_t>(
      std::count_if(invariant_factors.begin(), invariant_factors.end(), [](const BigInt& d) { return sgn(d) == 0; }));
}

std::optional<BigInt> AbGroupPresentation::order() const {
  BigInt n = 1;
  for (const auto& d : invariant_factors) {
    if (sgn(d) == 0) return std::nullopt;
    n *= d;
  }
  return n;
}

std::string AbGroupPresentation::str() const {
  if (invariant_factors.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) out << " x ";
    if (sgn(invariant_factors[i]) == 0)
      out << "Z";
    else
      out << "Z/" << invariant_factors[i].get_str();
  }
  return out.str();
}

AbGroupPresentation present_cokernel(std::vector<std::string> generators, const RelationLattice& relations) {
  AbGroupPresentation out;
  out.generators = std::move(generators);
  out.relations = relations.matrix();
  const std::size_t width = relations.width();
  std::vector<BigInt> diag;
  if (out.relations.rows() > 0) diag = smith_normal_form(out.relations).invariants();
  std::size_t nonzero = 0;
  for (const auto& d : diag) {
    if (sgn(d) == 0) continue;
    ++nonzero;
    if (d != 1) out.invariant_factors.push_back(d);
  }
  for (std::size_t i = nonzero; i < width; ++i) out.invariant_factors.push_back(BigInt(0));
  return out;
}

}  // namespace coringlab
