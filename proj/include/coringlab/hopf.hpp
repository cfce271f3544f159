#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coringlab/algebra.hpp"
#include "coringlab/field.hpp"
#include "coringlab/group.hpp"

namespace coringlab {

// Index of a distinguished basis element of H: a group element of kM, or the
// group element g of the dual basis vector p_g of k^G.
using HKey = GroupElem;
using KeyPair = std::pair<HKey, HKey>;
// Finitely supported linear combination of basis keys.
using HElement = std::map<HKey, Scalar>;

// Inclusive range of Z-degrees searched by operations that must enumerate
// over kZ. Ignored for finite H.
struct DegreeWindow {
  std::int64_t lo = -3;
  std::int64_t hi = 3;

  bool contains(std::int64_t d) const { return lo <= d && d <= hi; }
  // Smallest window containing this one and its negation.
  DegreeWindow symmetric() const;
  std::string str() const;
  bool operator==(const DegreeWindow&) const = default;
};

enum class HopfVariant { GroupBasis, DualGroup };

// Commutative bialgebra from one of the two supported families: the group
// algebra kM of an abelian group M (Z or finite), or the dual k^G of a finite
// group. All structure maps have coefficients in {0, 1}.
struct HopfDesc {
  Field field;
  HopfVariant variant;
  GroupSpec group;
  // Comultiplication table for finite groups, indexed by key. Tests may edit it.
  std::vector<std::vector<KeyPair>> comult;

  bool is_finite() const { return group.is_finite(); }
  std::size_t dim() const { return group.order(); }
  std::vector<HKey> keys() const;
  // Basis keys for enumeration: all keys for finite H, the window for kZ.
  std::vector<HKey> keys_in(const DegreeWindow& window) const;

  std::vector<KeyPair> coproduct(HKey h) const;
  // Product of two basis elements; empty when it vanishes (p_g p_h, g != h).
  std::optional<HKey> product(HKey a, HKey b) const;
  Scalar counit(HKey h) const;
  // 1_H as a sum of basis keys with coefficient 1.
  std::vector<HKey> unit() const;
  HKey antipode(HKey h) const;
  std::string key_name(HKey h) const;
};

// Throws ValidationError for an invalid table, VariantError for non-abelian M.
HopfDesc make_group_basis_hopf(const Field& field, const GroupSpec& group);
// Throws VariantError for Z or an invalid table.
HopfDesc make_dual_group_hopf(const Field& field, const GroupSpec& group);

// Coassociativity, counit, multiplicativity of the comultiplication and the
// counit, unit laws and the antipode law, on all basis keys (window for kZ).
ValidationReport validate_bialgebra(const HopfDesc& hopf, const DegreeWindow& window = {-2, 2});

// A grouplike element of H: a basis key for kM, a character for k^G.
struct HopfGrouplike {
  HKey element = 0;
  std::vector<Scalar> character;  // character[g] = chi(g), dual variant only

  bool operator==(const HopfGrouplike&) const = default;
};

HElement as_element(const HopfDesc& hopf, const HopfGrouplike& g);
// All group elements (window for Z) or all characters G -> k^*. Characters
// need a prime field; throws VariantError over Q.
std::vector<HopfGrouplike> grouplikes_of_hopf(const HopfDesc& hopf, const DegreeWindow& window = {});

}  // namespace coringlab
