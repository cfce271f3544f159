#include "coringlab/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "coringlab/error.hpp"

namespace coringlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

Grouplike coboundary_d(const CoringCtx& ctx, const AlgElement& a) {
  const FinAlgebra& alg = ctx.algebra();
  auto inv = alg.try_invert(a);
  if (!inv) throw DomainError("d is only defined on units; " + alg.format(a) + " is not invertible");
  Grouplike out;
  out.element = left_multiply(alg, *inv, ctx.coaction.rho(a));
  out.inverse = left_multiply(alg, a, ctx.coaction.rho(*inv));
  out.invertible = Invertibility::Yes;
  return out;
}

namespace {

// Basis of {a : f(a) = 0} for a linear map f: A -> A (x) H.
std::vector<AlgElement> kernel_of(const CoringCtx& ctx, const std::function<CoringElement(const AlgElement&)>& f) {
  const FinAlgebra& alg = ctx.algebra();
  const std::size_t n = alg.dim();
  std::vector<CoringElement> images;
  std::set<HKey> keys;
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(f(alg.basis(i)));
    for (const auto& [k, c] : images.back().terms()) keys.insert(k);
  }
  Matrix m(keys.size() * n, n);
  std::size_t t = 0;
  for (HKey k : keys) {
    for (std::size_t col = 0; col < n; ++col) {
      const AlgElement c = images[col].coeff(alg, k);
      for (std::size_t r = 0; r < n; ++r) m(t * n + r, col) = c.coeffs[r];
    }
    ++t;
  }
  std::vector<AlgElement> out;
  if (keys.empty()) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(alg.basis(i));
    return out;
  }
  for (auto& v : kernel_basis(alg.field(), m)) out.push_back(AlgElement{std::move(v)});
  return out;
}

struct UnitSearch {
  Verdict status = Verdict::Unknown;
  std::optional<AlgElement> unit;
  std::uint64_t searched = 0;
};

// Looks for a unit in the span of `basis`: exhaustively over F_p, otherwise
// among the supplied witness and the basis vectors.
UnitSearch find_unit(const FinAlgebra& alg, const std::vector<AlgElement>& basis, const SearchOptions& opts) {
  UnitSearch out;
  if (basis.empty()) {
    out.status = Verdict::No;
    return out;
  }
  if (opts.witness && in_span(alg, basis, *opts.witness) && alg.is_unit(*opts.witness)) {
    out.status = Verdict::Yes;
    out.unit = opts.witness;
    out.searched = 1;
    return out;
  }
  if (alg.field().is_prime_field()) {
    for (const auto& a : enumerate_span(alg, basis, opts.cap)) {
      ++out.searched;
      if (alg.is_unit(a)) {
        out.status = Verdict::Yes;
        out.unit = a;
        return out;
      }
    }
    out.status = Verdict::No;
    return out;
  }
  for (const auto& a : basis) {
    ++out.searched;
    if (alg.is_unit(a)) {
      out.status = Verdict::Yes;
      out.unit = a;
      return out;
    }
  }
  return out;
}

// dim of the ideal generated by `basis`.
std::size_t ideal_rank(const FinAlgebra& alg, const std::vector<AlgElement>& basis) {
  std::vector<Vector> products;
  for (const auto& b : basis)
    for (std::size_t j = 0; j < alg.dim(); ++j) products.push_back(alg.mul(b, alg.basis(j)).coeffs);
  return span_rank(alg.field(), products, alg.dim());
}

void require_prime(const CoringCtx& ctx, const char* what) {
  if (!ctx.field().is_prime_field())
    throw VariantError(std::string(what) + " enumerates units and needs a prime field");
}

void require_action(const CoringCtx& ctx, const char* what) {
  if (ctx.coaction.kind() != CoactionKind::Action)
    throw VariantError(std::string(what) + " needs a group action (dual Hopf algebra k^G)");
}

}  // namespace

TwistCoinvariants twist_coinvariants(const CoringCtx& ctx, const CoringElement& x, const SearchOptions& opts) {
  const FinAlgebra& alg = ctx.algebra();
  TwistCoinvariants out;
  out.x = x;
  out.basis = kernel_of(ctx, [&](const AlgElement& a) {
    return sub(alg, ctx.coaction.rho(a), left_multiply(alg, a, x));
  });
  UnitSearch s = find_unit(alg, out.basis, opts);
  out.has_unit = s.status;
  out.unit_witness = std::move(s.unit);
  out.searched = s.searched;
  out.generates = ideal_rank(alg, out.basis) == alg.dim();
  return out;
}

std::vector<AlgElement> twisted_module_coinvariants(const CoringCtx& ctx, const CoringElement& x) {
  const FinAlgebra& alg = ctx.algebra();
  const CoringElement one = coring_one(alg, ctx.hopf());
  return kernel_of(ctx, [&](const AlgElement& a) {
    return sub(alg, ctx.coaction.right_act(x, a), left_multiply(alg, a, one));
  });
}

IsoWitness twisted_iso_witness(const CoringCtx& ctx, const CoringElement& x, const CoringElement& y,
                               const SearchOptions& opts) {
  const FinAlgebra& alg = ctx.algebra();
  std::vector<AlgElement> solutions = kernel_of(ctx, [&](const AlgElement& b) {
    return sub(alg, ctx.coaction.right_act(y, b), left_multiply(alg, b, x));
  });
  IsoWitness out;
  out.solution_dim = solutions.size();
  UnitSearch s = find_unit(alg, solutions, opts);
  out.status = s.status;
  out.unit = std::move(s.unit);
  out.searched = s.searched;
  return out;
}

EMembership e_membership(const CoringCtx& ctx, const Grouplike& x) {
  if (x.invertible != Invertibility::Yes || !x.inverse)
    throw DomainError("membership in E needs the inverse of the grouplike");
  const FinAlgebra& alg = ctx.algebra();
  auto twist_basis = [&](const CoringElement& g) {
    return kernel_of(ctx, [&](const AlgElement& a) { return sub(alg, ctx.coaction.rho(a), left_multiply(alg, a, g)); });
  };
  EMembership out;
  out.rank = ideal_rank(alg, twist_basis(x.element));
  out.inverse_rank = ideal_rank(alg, twist_basis(*x.inverse));
  out.member = out.rank == alg.dim() && out.inverse_rank == alg.dim();
  return out;
}

CoboundaryImage coboundary_image(const CoringCtx& ctx, std::uint64_t cap) {
  CoboundaryImage out;
  out.units = enumerate_units(ctx.algebra(), cap);
  const CoringElement one = coring_one(ctx.algebra(), ctx.hopf());
  std::set<CoringElement> image;
  for (const auto& a : out.units) {
    CoringElement x = coboundary_d(ctx, a).element;
    if (x == one) out.kernel.push_back(a);
    image.insert(std::move(x));
  }
  out.image.assign(image.begin(), image.end());
  return out;
}

std::vector<CoringElement> HarrisonH1::representatives() const {
  std::vector<CoringElement> out;
  for (std::size_t i : quotient.representatives) out.push_back(invertible[i]);
  return out;
}

HarrisonH1 harrison_h1(const CoringCtx& ctx, const EnumerationBounds& bounds) {
  require_prime(ctx, "H^1");
  const FinAlgebra& alg = ctx.algebra();
  const HopfDesc& hopf = ctx.hopf();
  HarrisonH1 out;
  out.window = bounds.window;
  out.window_relative = !hopf.is_finite();
  out.grouplikes = enumerate_grouplikes(ctx, bounds);
  for (const auto& g : out.grouplikes)
    if (g.invertible == Invertibility::Yes) out.invertible.push_back(g.element);
  out.coboundaries = coboundary_image(ctx, bounds.element_cap);
  if (!hopf.is_finite()) {
    for (const auto& x : out.coboundaries.image)
      for (const auto& [k, c] : x.terms())
        if (!bounds.window.contains(k)) {
          ++out.image_outside_window;
          break;
        }
  }
  std::vector<std::string> labels;
  for (const auto& x : out.invertible) labels.push_back(format(alg, hopf, x));
  out.quotient = quotient_by_subgroup(
      out.invertible, [&](const CoringElement& a, const CoringElement& b) { return coring_mul(ctx, a, b); },
      coring_one(alg, hopf), out.coboundaries.image, hopf.is_finite(), std::move(labels));
  return out;
}

std::string sweedler_violation(const CoringCtx& ctx, const SweedlerCocycle& phi) {
  const FinAlgebra& alg = ctx.algebra();
  const GroupSpec& grp = ctx.hopf().group;
  const std::size_t n = grp.order();
  if (phi.table.size() != n) return "cocycle table has " + std::to_string(phi.table.size()) + " entries, expected " + std::to_string(n);
  if (phi.table[static_cast<std::size_t>(grp.identity())] != alg.one())
    return "phi(" + grp.name(grp.identity()) + ") = " + alg.format(phi.table[static_cast<std::size_t>(grp.identity())]) + " is not 1";
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const auto gh = static_cast<std::size_t>(grp.op(static_cast<HKey>(g), static_cast<HKey>(h)));
      const AlgElement rhs = alg.mul(ctx.coaction.act(static_cast<HKey>(g), phi.table[h]), phi.table[g]);
      if (phi.table[gh] != rhs)
        return "phi(" + grp.name(static_cast<HKey>(g)) + grp.name(static_cast<HKey>(h)) + ") = " +
               alg.format(phi.table[gh]) + " but (g.phi(h))phi(g) = " + alg.format(rhs);
    }
  return {};
}

SweedlerCocycle sweedler_of_grouplike(const CoringCtx& ctx, const CoringElement& x) {
  require_action(ctx, "the Sweedler correspondence");
  SweedlerCocycle phi;
  for (HKey g : ctx.hopf().keys()) phi.table.push_back(x.coeff(ctx.algebra(), g));
  const std::string bad = sweedler_violation(ctx, phi);
  if (!bad.empty()) throw DomainError("not a Sweedler cocycle: " + bad);
  return phi;
}

CoringElement grouplike_of_sweedler(const CoringCtx& ctx, const SweedlerCocycle& phi) {
  require_action(ctx, "the Sweedler correspondence");
  CoringElement x;
  for (std::size_t g = 0; g < phi.table.size(); ++g) x.add_term(ctx.algebra(), static_cast<HKey>(g), phi.table[g]);
  return x;
}

std::vector<SweedlerCocycle> GroupH1::representatives() const {
  std::vector<SweedlerCocycle> out;
  for (std::size_t i : quotient.representatives) out.push_back(cocycles[i]);
  return out;
}

GroupH1 group_h1(const CoringCtx& ctx, const EnumerationBounds& bounds) {
  require_action(ctx, "group H^1");
  require_prime(ctx, "group H^1");
  const FinAlgebra& alg = ctx.algebra();
  const GroupSpec& grp = ctx.hopf().group;
  const std::size_t n = grp.order();
  const auto e = static_cast<std::size_t>(grp.identity());
  const std::vector<AlgElement> units = enumerate_units(alg, bounds.element_cap);

  GroupH1 out;
  std::vector<AlgElement> table(n);
  std::vector<bool> set(n, false);
  table[e] = alg.one();
  set[e] = true;
  std::vector<std::size_t> order;
  for (std::size_t g = 0; g < n; ++g)
    if (g != e) order.push_back(g);

  auto op = [&](std::size_t g, std::size_t h) {
    return static_cast<std::size_t>(grp.op(static_cast<HKey>(g), static_cast<HKey>(h)));
  };
  // Every identity phi(gh) = (g.phi(h))phi(g) whose three values are known
  // and that mentions `newest`.
  auto consistent = [&](std::size_t newest) {
    for (std::size_t g = 0; g < n; ++g) {
      if (!set[g]) continue;
      for (std::size_t h = 0; h < n; ++h) {
        const std::size_t gh = op(g, h);
        if (!set[h] || !set[gh]) continue;
        if (g != newest && h != newest && gh != newest) continue;
        if (table[gh] != alg.mul(ctx.coaction.act(static_cast<HKey>(g), table[h]), table[g])) return false;
      }
    }
    return true;
  };
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> search = [&](std::size_t t) {
    if (t == order.size()) {
      out.cocycles.push_back(SweedlerCocycle{table});
      return;
    }
    const std::size_t g = order[t];
    for (const auto& u : units) {
      if (++nodes > bounds.search_cap)
        throw BoundError("cocycle search exceeded " + std::to_string(bounds.search_cap) + " nodes");
      table[g] = u;
      set[g] = true;
      if (consistent(g)) search(t + 1);
      set[g] = false;
    }
  };
  if (consistent(e)) search(0);
  std::sort(out.cocycles.begin(), out.cocycles.end());

  std::set<SweedlerCocycle> bounds_set;
  for (const auto& b : units) {
    const AlgElement binv = *alg.try_invert(b);
    SweedlerCocycle phi;
    for (std::size_t g = 0; g < n; ++g) phi.table.push_back(alg.mul(binv, ctx.coaction.act(static_cast<HKey>(g), b)));
    bounds_set.insert(std::move(phi));
  }
  out.coboundaries.assign(bounds_set.begin(), bounds_set.end());

  std::vector<std::string> labels;
  for (const auto& phi : out.cocycles) {
    std::string s;
    for (std::size_t g = 0; g < n; ++g) {
      if (g) s += ", ";
      s += grp.name(static_cast<HKey>(g)) + "->" + alg.format(phi.table[g]);
    }
    labels.push_back("{" + s + "}");
  }
  SweedlerCocycle identity{std::vector<AlgElement>(n, alg.one())};
  out.quotient = quotient_by_subgroup(
      out.cocycles,
      [&](const SweedlerCocycle& a, const SweedlerCocycle& b) {
        SweedlerCocycle c;
        for (std::size_t g = 0; g < n; ++g) c.table.push_back(alg.mul(a.table[g], b.table[g]));
        return c;
      },
      identity, out.coboundaries, true, std::move(labels));
  return out;
}

std::string h1_bridge_mismatch(const CoringCtx& ctx, const HarrisonH1& harrison, const GroupH1& group) {
  const FinAlgebra& alg = ctx.algebra();
  if (harrison.invertible.size() != group.cocycles.size())
    return std::to_string(harrison.invertible.size()) + " invertible grouplikes but " +
           std::to_string(group.cocycles.size()) + " cocycles";
  std::map<SweedlerCocycle, std::size_t> index;
  for (std::size_t i = 0; i < group.cocycles.size(); ++i) index.emplace(group.cocycles[i], i);
  // Class of each grouplike on the cocycle side; the induced map on classes
  // must be a bijection.
  std::map<std::size_t, std::size_t> forward, backward;
  for (std::size_t i = 0; i < harrison.invertible.size(); ++i) {
    const CoringElement& x = harrison.invertible[i];
    const SweedlerCocycle phi = sweedler_of_grouplike(ctx, x);
    if (grouplike_of_sweedler(ctx, phi) != x) return "round trip changes " + format(alg, ctx.hopf(), x);
    auto it = index.find(phi);
    if (it == index.end()) return format(alg, ctx.hopf(), x) + " gives a cocycle missing from Z^1";
    const std::size_t a = harrison.quotient.class_of[i];
    const std::size_t b = group.quotient.class_of[it->second];
    if (auto [f, fresh] = forward.try_emplace(a, b); !fresh && f->second != b)
      return "the coset of " + format(alg, ctx.hopf(), x) + " splits";
    if (auto [r, fresh] = backward.try_emplace(b, a); !fresh && r->second != a)
      return "two cosets meet at " + format(alg, ctx.hopf(), x);
  }
  if (harrison.quotient.group.invariant_factors != group.quotient.group.invariant_factors)
    return "groups differ: " + harrison.quotient.group.str() + " vs " + group.quotient.group.str();
  return {};
}

Hilbert90Report hilbert90_report(const CoringCtx& ctx, const EnumerationBounds& bounds) {
  require_action(ctx, "the Hilbert 90 report");
  Hilbert90Report out;
  out.galois = galois_canonical_map(ctx.coaction);
  out.h1 = harrison_h1(ctx, bounds);
  out.expectation_applies = out.galois.galois();
  out.holds = !out.expectation_applies || out.h1.quotient.group.is_trivial();
  return out;
}

ExactSequenceReport exact_sequence_report(const CoringCtx& ctx, const EnumerationBounds& bounds) {
  require_prime(ctx, "the exact-sequence report");
  const FinAlgebra& alg = ctx.algebra();
  const HopfDesc& hopf = ctx.hopf();
  const CoringElement one = coring_one(alg, hopf);
  ExactSequenceReport out;
  out.h1 = harrison_h1(ctx, bounds);
  const auto& units = out.h1.coboundaries.units;
  for (const auto& a : units)
    if (is_coinvariant(ctx.coaction, a)) out.units_b.push_back(a);

  // ker d = units of B.
  const std::set<AlgElement> kernel(out.h1.coboundaries.kernel.begin(), out.h1.coboundaries.kernel.end());
  for (const auto& a : units) {
    ++out.at_units.checked;
    const bool in_b = is_coinvariant(ctx.coaction, a);
    if (in_b != (kernel.count(a) > 0)) {
      out.at_units.pass = false;
      out.at_units.failures.push_back(alg.format(a) + (in_b ? " is coinvariant but d(a) != 1" : " has d(a) = 1 but is not coinvariant"));
    }
  }

  // X in Im(d) iff a unit b with rho(b) = (b (x) 1) X exists.
  const std::set<CoringElement> image(out.h1.coboundaries.image.begin(), out.h1.coboundaries.image.end());
  for (const auto& x : out.h1.invertible) {
    ++out.at_grouplikes.checked;
    IsoWitness w = twisted_iso_witness(ctx, x, one, SearchOptions{bounds.element_cap, std::nullopt});
    const bool in_image = image.count(x) > 0;
    if (w.status == Verdict::Unknown || (w.status == Verdict::Yes) != in_image) {
      out.at_grouplikes.pass = false;
      out.at_grouplikes.failures.push_back(format(alg, hopf, x) + (in_image ? " is in Im(d)" : " is not in Im(d)") +
                                           ", iso witness " + to_string(w.status));
    }
    if (w.unit) {
      if (coboundary_d(ctx, *w.unit).element != x) {
        out.at_grouplikes.pass = false;
        out.at_grouplikes.failures.push_back("witness " + alg.format(*w.unit) + " for " + format(alg, hopf, x) +
                                             " has a different coboundary");
      }
      out.iso_witnesses.push_back(*w.unit);
    } else {
      out.iso_witnesses.push_back(alg.zero());
    }
  }

  // Im(d) in E, checked on the coboundaries themselves so that images outside
  // a degree window are covered too.
  std::map<CoringElement, AlgElement> preimage;
  for (const auto& a : units) preimage.try_emplace(coboundary_d(ctx, a).element, a);
  for (const auto& [x, a] : preimage) {
    ++out.image_in_e.checked;
    if (!e_membership(ctx, coboundary_d(ctx, a)).member) {
      out.image_in_e.pass = false;
      out.image_in_e.failures.push_back("d(" + alg.format(a) + ") = " + format(alg, hopf, x) + " is not in E");
    }
  }

  // E is closed under products and inverses, as far as the list reaches.
  std::map<CoringElement, std::size_t> index;
  for (std::size_t i = 0; i < out.h1.invertible.size(); ++i) index.emplace(out.h1.invertible[i], i);
  std::vector<const Grouplike*> by_index(out.h1.invertible.size());
  for (const auto& g : out.h1.grouplikes)
    if (auto it = index.find(g.element); it != index.end()) by_index[it->second] = &g;
  for (const Grouplike* g : by_index) out.in_e.push_back(e_membership(ctx, *g).member);
  auto in_e = [&](const CoringElement& x) -> std::optional<bool> {
    auto it = index.find(x);
    if (it == index.end()) return std::nullopt;
    return static_cast<bool>(out.in_e[it->second]);
  };
  for (std::size_t i = 0; i < by_index.size(); ++i) {
    if (!out.in_e[i]) continue;
    const Grouplike& x = *by_index[i];
    ++out.e_subgroup.checked;
    if (in_e(*x.inverse) == false) {
      out.e_subgroup.pass = false;
      out.e_subgroup.failures.push_back("inverse of " + format(alg, hopf, x.element) + " is not in E");
    }
    for (std::size_t j = i; j < by_index.size(); ++j) {
      if (!out.in_e[j]) continue;
      ++out.e_subgroup.checked;
      const CoringElement xy = coring_mul(ctx, x.element, by_index[j]->element);
      if (in_e(xy) == false) {
        out.e_subgroup.pass = false;
        out.e_subgroup.failures.push_back(format(alg, hopf, x.element) + " times " +
                                          format(alg, hopf, by_index[j]->element) + " is not in E");
      }
    }
  }
  return out;
}

}  // namespace coringlab
