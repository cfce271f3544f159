#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coringlab/abelian_group.hpp"
#include "coringlab/coring.hpp"

namespace coringlab {

// Three-valued answer for searches that are exhaustive only over prime fields.
enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict v);

// d(a) = (a^{-1} (x) 1) rho(a), with inverse (a (x) 1) rho(a^{-1}).
// Throws DomainError when a is not a unit.
Grouplike coboundary_d(const CoringCtx& ctx, const AlgElement& a);

struct TwistCoinvariants {
  CoringElement x;
  std::vector<AlgElement> basis;  // of A_X = {a : rho(a) = (a (x) 1) X}
  Verdict has_unit = Verdict::Unknown;
  std::optional<AlgElement> unit_witness;
  std::uint64_t searched = 0;  // elements of A_X inspected by the unit search
  bool generates = false;      // A A_X = A
};

struct SearchOptions {
  std::uint64_t cap = kDefaultElementCap;
  // Candidate supplied by the caller; certified before use. Over Q it is the
  // only way to obtain a positive answer beyond the solution basis itself.
  std::optional<AlgElement> witness;
};

TwistCoinvariants twist_coinvariants(const CoringCtx& ctx, const CoringElement& x, const SearchOptions& opts = {});
// Basis of {a : X rho(a) = a (x) 1}, the coinvariants of the twisted coaction.
std::vector<AlgElement> twisted_module_coinvariants(const CoringCtx& ctx, const CoringElement& x);

struct IsoWitness {
  Verdict status = Verdict::Unknown;
  std::optional<AlgElement> unit;  // b with Y rho(b) = (b (x) 1) X
  std::size_t solution_dim = 0;
  std::uint64_t searched = 0;
};

IsoWitness twisted_iso_witness(const CoringCtx& ctx, const CoringElement& x, const CoringElement& y,
                               const SearchOptions& opts = {});

struct EMembership {
  bool member = false;
  std::size_t rank = 0;          // dim A A_X
  std::size_t inverse_rank = 0;  // dim A A_{X^{-1}}
};

// Throws DomainError unless the inverse of X is known.
EMembership e_membership(const CoringCtx& ctx, const Grouplike& x);

// Image of d with the units producing each element.
struct CoboundaryImage {
  std::vector<AlgElement> units;        // all units of A, sorted
  std::vector<CoringElement> image;     // distinct values of d, sorted
  std::vector<AlgElement> kernel;       // units with d(a) = 1 (x) 1
};

CoboundaryImage coboundary_image(const CoringCtx& ctx, std::uint64_t cap = kDefaultElementCap);

struct HarrisonH1 {
  DegreeWindow window;
  bool window_relative = false;  // kZ: only grouplikes supported in the window
  std::vector<Grouplike> grouplikes;       // everything enumerated, invertible or not
  std::vector<CoringElement> invertible;   // G^i, sorted
  CoboundaryImage coboundaries;
  std::size_t image_outside_window = 0;    // d(a) not supported in the window
  Quotient quotient;                       // G^i / Im(d), indices into `invertible`
  std::vector<CoringElement> representatives() const;
};

// Requires a prime field.
HarrisonH1 harrison_h1(const CoringCtx& ctx, const EnumerationBounds& bounds = {});

// phi: G -> A indexed by group element.
struct SweedlerCocycle {
  std::vector<AlgElement> table;
  bool operator==(const SweedlerCocycle&) const = default;
  auto operator<=>(const SweedlerCocycle& other) const { return table <=> other.table; }
};

// Empty when phi(e) = 1 and phi(gh) = (g.phi(h)) phi(g) for all g, h;
// otherwise names the first failing identity.
std::string sweedler_violation(const CoringCtx& ctx, const SweedlerCocycle& phi);
// Throws VariantError unless ctx is a k^G action; DomainError when X does not
// give a cocycle.
SweedlerCocycle sweedler_of_grouplike(const CoringCtx& ctx, const CoringElement& x);
CoringElement grouplike_of_sweedler(const CoringCtx& ctx, const SweedlerCocycle& phi);

struct GroupH1 {
  std::vector<SweedlerCocycle> cocycles;      // unit-valued, sorted
  std::vector<SweedlerCocycle> coboundaries;  // g -> b^{-1}(g.b), sorted, distinct
  Quotient quotient;
  std::vector<SweedlerCocycle> representatives() const;
};

// H^1(G, units of A) computed directly from the group action. Throws
// VariantError unless ctx is a k^G action over a prime field.
GroupH1 group_h1(const CoringCtx& ctx, const EnumerationBounds& bounds = {});

// Empty when X -> phi_X maps G^i bijectively onto the cocycles and carries
// the cosets of Im(d) onto the cosets of the coboundaries; otherwise the
// first mismatch.
std::string h1_bridge_mismatch(const CoringCtx& ctx, const HarrisonH1& harrison, const GroupH1& group);

struct Hilbert90Report {
  GaloisReport galois;
  HarrisonH1 h1;
  bool expectation_applies = false;  // canonical map bijective
  bool holds = true;                 // H^1 trivial whenever expected
};

// Throws VariantError unless ctx is a k^G action.
Hilbert90Report hilbert90_report(const CoringCtx& ctx, const EnumerationBounds& bounds = {});

struct JointCheck {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // formatted witnesses
};

struct ExactSequenceReport {
  std::vector<AlgElement> units_b;
  HarrisonH1 h1;
  // ker d = units of B.
  JointCheck at_units;
  // X in Im(d) iff Y rho(b) = (b (x) 1) X has a unit solution for Y = 1 (x) 1.
  JointCheck at_grouplikes;
  std::vector<AlgElement> iso_witnesses;  // per element of G^i, when found
  // Im(d) contained in E.
  JointCheck image_in_e;
  std::vector<bool> in_e;  // per element of G^i
  // E closed under products and inverses inside the enumerated G^i.
  JointCheck e_subgroup;
  bool pass() const { return at_units.pass && at_grouplikes.pass && image_in_e.pass && e_subgroup.pass; }
};

ExactSequenceReport exact_sequence_report(const CoringCtx& ctx, const EnumerationBounds& bounds = {});

}  // namespace coringlab
