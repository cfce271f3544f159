#pragma once

#include <map>
#include <vector>

#include "coringlab/algebra.hpp"
#include "coringlab/coring_element.hpp"
#include "coringlab/hopf.hpp"
#include "coringlab/linalg.hpp"

namespace coringlab {

enum class CoactionKind { Grading, Action };

// A right H-comodule algebra structure rho: A -> A (x) H. For group-basis H it
// is a grading, rho(e_i) = e_i (x) deg(i); for H = k^G it comes from a left
// G-action by algebra automorphisms, rho(a) = sum_g (g.a) (x) p_g.
class Coaction {
 public:
  // No law checking; the checked constructors are coaction_from_grading and
  // coaction_from_action.
  static Coaction grading(FinAlgebra alg, HopfDesc hopf, std::vector<HKey> degrees);
  static Coaction action(FinAlgebra alg, HopfDesc hopf, std::vector<Matrix> matrices);

  const FinAlgebra& algebra() const { return alg_; }
  const HopfDesc& hopf() const { return hopf_; }
  CoactionKind kind() const { return kind_; }
  // Grading only: degree of each basis vector.
  const std::vector<HKey>& degrees() const { return degrees_; }
  // Action only: matrix of each group element, indexed by group element.
  const std::vector<Matrix>& matrices() const { return matrices_; }

  const CoringElement& rho_basis(std::size_t i) const { return rho_basis_.at(i); }
  CoringElement rho(const AlgElement& a) const;
  // X . a = X rho(a), the right A-action on the coring.
  CoringElement right_act(const CoringElement& x, const AlgElement& a) const;
  // Action only: g . a.
  AlgElement act(HKey g, const AlgElement& a) const;
  // Keys that occur in rho(A), ascending.
  std::vector<HKey> occurring_keys() const;

 private:
  Coaction(FinAlgebra alg, HopfDesc hopf, CoactionKind kind);
  void build();

  FinAlgebra alg_;
  HopfDesc hopf_;
  CoactionKind kind_;
  std::vector<HKey> degrees_;
  std::vector<Matrix> matrices_;
  std::vector<CoringElement> rho_basis_;
};

// Throws VariantError unless hopf is group-basis; ValidationError naming the
// offending structure constant when the grading is not homogeneous.
Coaction coaction_from_grading(FinAlgebra alg, HopfDesc hopf, std::vector<HKey> degrees);
// Throws VariantError unless hopf is k^G; ValidationError when a matrix is not
// an algebra automorphism or g -> matrix is not a homomorphism.
Coaction coaction_from_action(FinAlgebra alg, HopfDesc hopf, std::vector<Matrix> matrices);
// rho(a) = a (x) 1_H.
Coaction identity_coaction(FinAlgebra alg, HopfDesc hopf);

// Multiplicativity, unit, counit and coassociativity of rho on basis vectors.
ValidationReport validate_comodule_algebra(const Coaction& co);

struct CoinvariantAlgebra {
  Subalgebra subalgebra;
  Matrix inclusion;  // n x dim B, columns are the basis of B in A-coordinates
};

// B = {a : rho(a) = a (x) 1}.
CoinvariantAlgebra coinvariants(const Coaction& co);
bool is_coinvariant(const Coaction& co, const AlgElement& a);

struct GaloisReport {
  Matrix matrix;                 // can on the basis of A (x)_B A
  std::vector<HKey> target_keys; // H-part of the codomain A (x) span(target_keys)
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  std::size_t rank = 0;
  bool injective = false;
  bool surjective = false;
  // kZ: the full codomain A (x) kZ is infinite-dimensional.
  bool infinite_codomain = false;
  bool bijective() const { return injective && surjective; }
  bool galois() const { return bijective() && !infinite_codomain; }
};

// can(a (x)_B b) = a b_[0] (x) b_[1]. For kZ the codomain is restricted to the
// degrees occurring in A.
GaloisReport galois_canonical_map(const Coaction& co);

}  // namespace coringlab
