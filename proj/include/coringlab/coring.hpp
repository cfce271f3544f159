#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coringlab/comodule.hpp"
#include "coringlab/coring_element.hpp"

namespace coringlab {

// The coring A (x) H attached to a comodule algebra.
struct CoringCtx {
  Coaction coaction;

  const FinAlgebra& algebra() const { return coaction.algebra(); }
  const HopfDesc& hopf() const { return coaction.hopf(); }
  const Field& field() const { return coaction.algebra().field(); }
};

enum class Invertibility { Yes, No, UnknownWithinWindow };

std::string to_string(Invertibility inv);

struct Grouplike {
  CoringElement element;
  Invertibility invertible = Invertibility::UnknownWithinWindow;
  std::optional<CoringElement> inverse;
};

struct GrouplikeCheck {
  bool grouplike = false;
  std::string witness;  // first failing identity, empty when grouplike
  explicit operator bool() const { return grouplike; }
};

// Comultiplication identity sum a_i (x) D(h_i) = X (x)_A X, rewritten into
// A (x) H (x) H through rho, and the counit identity sum a_i e(h_i) = 1.
GrouplikeCheck is_grouplike(const CoringCtx& ctx, const CoringElement& x);

CoringElement coring_mul(const CoringCtx& ctx, const CoringElement& x, const CoringElement& y);

struct InverseResult {
  Invertibility status = Invertibility::UnknownWithinWindow;
  std::optional<CoringElement> inverse;
};

// Solves X Y = 1 (x) 1 for Y supported on the window (all of H when finite).
// Over kZ a failed solve is reported as unknown, never as a definite no.
InverseResult try_invert_coring(const CoringCtx& ctx, const CoringElement& x, const DegreeWindow& window);

struct EnumerationBounds {
  DegreeWindow window{-3, 3};
  std::uint64_t element_cap = kDefaultElementCap;
  // Maximum number of partial assignments visited by a backtracking search.
  std::uint64_t search_cap = std::uint64_t{1} << 22;
};

// All grouplikes with support in the window (kZ) or all grouplikes (finite H),
// sorted, each with invertibility resolved inside the symmetrized window.
// Gradings are solved degree by degree from the homogeneous-component
// equations; actions from the Sweedler cocycle equations.
std::vector<Grouplike> enumerate_grouplikes(const CoringCtx& ctx, const EnumerationBounds& bounds = {});

// Orthogonal idempotents e_i summing to 1 with distinct degrees d_i.
struct IdempotentDegreeMap {
  std::vector<std::pair<AlgElement, HKey>> parts;  // degrees strictly increasing in normal form
  bool operator==(const IdempotentDegreeMap&) const = default;
};

// sum e_i (x) d_i with inverse sum e_i (x) d_i^{-1}. Throws ValidationError if
// the family is not a complete orthogonal family of nonzero degree-0
// idempotents with distinct degrees; VariantError unless ctx is a grading.
Grouplike grouplike_from_idempotent_degrees(const CoringCtx& ctx, const IdempotentDegreeMap& map);
// Inverse direction; empty when X is not of that form.
std::optional<IdempotentDegreeMap> idempotent_degrees_of_grouplike(const CoringCtx& ctx, const CoringElement& x);
// Every normal-form idempotent-degree map with degrees in the window.
std::vector<IdempotentDegreeMap> enumerate_idempotent_degree_maps(const CoringCtx& ctx,
                                                                  const EnumerationBounds& bounds = {});

// i(g) = 1_A (x) g.
Grouplike induced_grouplike(const CoringCtx& ctx, const HopfGrouplike& g);

}  // namespace coringlab
