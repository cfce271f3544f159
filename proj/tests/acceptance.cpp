#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "coringlab/cohomology.hpp"
#include "coringlab/instance.hpp"
#include "oracles.hpp"

using namespace coringlab;

namespace {

struct Fixture {
  std::string name;
  CoringCtx ctx;
  EnumerationBounds bounds;
  HarrisonH1 h1;
};

const std::vector<std::string> kCorpus = {
    "f4_frobenius.json",         "f9_frobenius.json",  "f3_trivial_c2.json",    "f2xf2_swap_c2.json",
    "trivial_c1.json",           "dualnumbers_graded.json", "dualnumbers_f3_graded.json",
    "f2xf2_graded.json",         "f2xf2xf2_graded.json", "c2graded_f3.json"};

Fixture load(const std::string& name) {
  Instance inst = load_instance(std::string(CORINGLAB_INSTANCE_DIR) + "/" + name);
  HarrisonH1 h = harrison_h1(inst.ctx, inst.bounds);
  return {name, inst.ctx, inst.bounds, std::move(h)};
}

CoringElement one_of(const CoringCtx& ctx) { return coring_one(ctx.algebra(), ctx.hopf()); }

std::map<CoringElement, Grouplike> index_of(const HarrisonH1& h) {
  std::map<CoringElement, Grouplike> out;
  for (const auto& g : h.grouplikes) out.emplace(g.element, g);
  return out;
}

bool is_dual(const Fixture& f) { return f.ctx.coaction.kind() == CoactionKind::Action; }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// 1
Outcome coboundary_soundness(const std::vector<Fixture>& corpus) {
  std::size_t checked = 0;
  for (const auto& f : corpus)
    for (const auto& u : oracle::units(f.ctx.algebra())) {
      const Grouplike g = coboundary_d(f.ctx, u);
      ++checked;
      if (!is_grouplike(f.ctx, g.element) || !g.inverse || coring_mul(f.ctx, g.element, *g.inverse) != one_of(f.ctx))
        return {false, f.name + ": d(" + f.ctx.algebra().format(u) + ") fails"};
    }
  return {true, std::to_string(checked) + " units over " + std::to_string(corpus.size()) + " instances"};
}

// 2
Outcome exact_at_units(const std::vector<Fixture>& corpus) {
  std::size_t checked = 0;
  for (const auto& f : corpus) {
    const FinAlgebra& a = f.ctx.algebra();
    std::vector<AlgElement> units_b;
    for (const auto& u : oracle::units(a))
      if (f.ctx.coaction.rho(u) == left_multiply(a, u, one_of(f.ctx))) units_b.push_back(u);
    const CoboundaryImage img = coboundary_image(f.ctx);
    checked += img.units.size();
    if (img.kernel != units_b) return {false, f.name + ": ker d differs from units of B"};
  }
  return {true, std::to_string(checked) + " units checked"};
}

// 3
Outcome exact_at_grouplikes(const std::vector<Fixture>& corpus) {
  std::size_t checked = 0;
  for (const auto& f : corpus) {
    const auto& img = f.h1.coboundaries.image;
    for (const auto& x : f.h1.invertible) {
      const bool in_image = std::binary_search(img.begin(), img.end(), x);
      const IsoWitness w = twisted_iso_witness(f.ctx, x, one_of(f.ctx));
      ++checked;
      if (w.status == Verdict::Unknown || in_image != (w.status == Verdict::Yes))
        return {false, f.name + ": " + format(f.ctx.algebra(), f.ctx.hopf(), x)};
    }
  }
  return {true, std::to_string(checked) + " invertible grouplikes checked"};
}

// 4
Outcome hilbert90(const std::vector<Fixture>& corpus) {
  const std::map<std::string, std::size_t> expected = {{"f4_frobenius.json", 3}, {"f9_frobenius.json", 4}};
  std::string detail;
  for (const auto& f : corpus) {
    const auto it = expected.find(f.name);
    if (it == expected.end()) continue;
    const GaloisReport gal = galois_canonical_map(f.ctx.coaction);
    const GroupH1 grp = group_h1(f.ctx, f.bounds);
    const bool ok = gal.galois() && f.h1.quotient.group.is_trivial() && grp.quotient.group.is_trivial() &&
                    f.h1.invertible.size() == it->second && f.h1.coboundaries.image.size() == it->second;
    if (!ok) return {false, f.name};
    detail += (detail.empty() ? "" : ", ") + f.name.substr(0, 2) + " |G^i| = |Im d| = " + std::to_string(it->second);
  }
  return {true, detail};
}

// 5
Outcome nontrivial_h1(const std::vector<Fixture>& corpus) {
  for (const auto& f : corpus) {
    if (f.name != "f3_trivial_c2.json") continue;
    if (f.h1.quotient.group.str() != "Z/2") return {false, "H^1 = " + f.h1.quotient.group.str()};
    if (oracle::sweedler_cocycles(f.ctx).size() != 2) return {false, "oracle disagrees"};
    HopfGrouplike sign{0, {Scalar(1), Scalar(f.ctx.field().characteristic() - 1)}};
    const Grouplike s = induced_grouplike(f.ctx, sign);
    const auto& inv = f.h1.invertible;
    const auto pos = std::find(inv.begin(), inv.end(), s.element);
    const auto one = std::find(inv.begin(), inv.end(), one_of(f.ctx));
    if (pos == inv.end() || one == inv.end()) return {false, "sign character not enumerated"};
    const auto& cls = f.h1.quotient.class_of;
    if (cls[pos - inv.begin()] == cls[one - inv.begin()]) return {false, "sign character is a coboundary"};
    const auto reps = f.h1.representatives();
    if (std::find(reps.begin(), reps.end(), s.element) == reps.end()) return {false, "sign character not a representative"};
    return {true, "Z/2, generated by " + format(f.ctx.algebra(), f.ctx.hopf(), s.element)};
  }
  return {false, "fixture missing"};
}

// 6
Outcome graded_bijection() {
  std::string detail;
  for (unsigned n : {2u, 3u}) {
    const CoringCtx ctx{coaction_from_grading(product_of_fields(Field::prime(2), n),
                                              make_group_basis_hopf(Field::prime(2), GroupSpec::integers()),
                                              std::vector<HKey>(n, 0))};
    EnumerationBounds b;
    b.window = {-2, 2};
    std::vector<CoringElement> found, image;
    for (const auto& g : enumerate_grouplikes(ctx, b)) {
      found.push_back(g.element);
      if (!idempotent_degrees_of_grouplike(ctx, g.element)) return {false, "no idempotent decomposition"};
    }
    for (const auto& m : enumerate_idempotent_degree_maps(ctx, b))
      image.push_back(grouplike_from_idempotent_degrees(ctx, m).element);
    std::sort(image.begin(), image.end());
    const std::size_t want = n == 2 ? 25 : 125;
    if (found != image || found.size() != want) return {false, "n = " + std::to_string(n) + ": " + std::to_string(found.size())};
    detail += (detail.empty() ? "counts " : ", ") + std::to_string(found.size());
  }
  return {true, detail};
}

// 7
Outcome nilpotent_counterexample() {
  const Field f = Field::prime(2);
  const CoringCtx ctx{coaction_from_grading(dual_numbers(f), make_group_basis_hopf(f, GroupSpec::integers()), {0, 1})};
  const FinAlgebra& a = ctx.algebra();
  CoringElement x;
  x.add_term(a, 0, a.from_ints({1, 1}));
  x.add_term(a, 1, a.from_ints({0, 1}));
  if (!is_grouplike(ctx, x)) return {false, "not grouplike"};
  if (coboundary_d(ctx, a.from_ints({1, 1})).element != x) return {false, "differs from d(1+x)"};
  if (idempotent_degrees_of_grouplike(ctx, x)) return {false, "idempotent decomposition found"};
  return {true, "(1+x)(x)1 + x(x)X = d(1+x), no idempotent decomposition"};
}

// 8
Outcome e_laws(const std::vector<Fixture>& corpus) {
  std::size_t checked = 0;
  for (const auto& f : corpus) {
    const auto by_elem = index_of(f.h1);
    for (const auto& u : oracle::units(f.ctx.algebra())) {
      ++checked;
      if (!e_membership(f.ctx, coboundary_d(f.ctx, u)).member) return {false, f.name + ": Im d not in E"};
    }
    std::vector<Grouplike> members;
    for (const auto& x : f.h1.invertible)
      if (e_membership(f.ctx, by_elem.at(x)).member) members.push_back(by_elem.at(x));
    for (const auto& g : members) {
      const auto inv = by_elem.find(*g.inverse);
      if (inv != by_elem.end() && !e_membership(f.ctx, inv->second).member) return {false, f.name + ": inverse"};
      for (const auto& k : members) {
        const auto prod = by_elem.find(coring_mul(f.ctx, g.element, k.element));
        ++checked;
        if (prod != by_elem.end() && prod->second.inverse && !e_membership(f.ctx, prod->second).member)
          return {false, f.name + ": product"};
      }
    }
  }
  const Field f2 = Field::prime(2);
  const CoringCtx ctx{coaction_from_grading(product_of_fields(f2, 2), make_group_basis_hopf(f2, GroupSpec::integers()),
                                            {0, 0})};
  const FinAlgebra& a = ctx.algebra();
  const Grouplike x = grouplike_from_idempotent_degrees(ctx, {{{a.from_ints({1, 0}), 0}, {a.from_ints({0, 1}), 1}}});
  if (e_membership(ctx, x).member) return {false, "e1(x)1 + e2(x)X lies in E"};
  return {true, std::to_string(checked) + " memberships checked, e1(x)1 + e2(x)X excluded"};
}

// 9
Outcome bridge(const std::vector<Fixture>& corpus) {
  std::size_t n = 0;
  for (const auto& f : corpus) {
    if (!is_dual(f)) continue;
    ++n;
    const GroupH1 g = group_h1(f.ctx, f.bounds);
    for (const auto& phi : g.cocycles)
      if (sweedler_of_grouplike(f.ctx, grouplike_of_sweedler(f.ctx, phi)) != phi) return {false, f.name + ": round trip"};
    for (const auto& x : f.h1.invertible)
      if (grouplike_of_sweedler(f.ctx, sweedler_of_grouplike(f.ctx, x)) != x) return {false, f.name + ": round trip"};
    const std::string mismatch = h1_bridge_mismatch(f.ctx, f.h1, g);
    if (!mismatch.empty()) return {false, f.name + ": " + mismatch};
    if (f.h1.quotient.group.invariant_factors != g.quotient.group.invariant_factors) return {false, f.name};
  }
  return {true, std::to_string(n) + " dual instances"};
}

// 10
Outcome oracle_equivalence(const std::vector<Fixture>& corpus) {
  std::string names;
  for (const auto& f : corpus) {
    if (f.ctx.field().characteristic() != 2 || f.ctx.algebra().dim() > 2) continue;
    EnumerationBounds b = f.bounds;
    b.window = {-1, 1};
    std::vector<CoringElement> found;
    for (const auto& g : enumerate_grouplikes(f.ctx, b)) found.push_back(g.element);
    const auto keys = f.ctx.hopf().keys_in(b.window);
    if (found != oracle::grouplikes(f.ctx, keys)) return {false, f.name};
    names += (names.empty() ? "" : ", ") + f.name;
  }
  return {true, names};
}

}  // namespace

int main() {
  std::vector<Fixture> corpus;
  try {
    for (const auto& n : kCorpus) corpus.push_back(load(n));
  } catch (const std::exception& e) {
    std::printf("[FAIL] corpus: %s\n", e.what());
    return 1;
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Grouplike-coboundary soundness", [&] { return coboundary_soundness(corpus); }},
      {"Exactness at G_m(A)", [&] { return exact_at_units(corpus); }},
      {"Exactness at G^i", [&] { return exact_at_grouplikes(corpus); }},
      {"Hilbert 90 at desk scale", [&] { return hilbert90(corpus); }},
      {"Nontrivial H^1 control", [&] { return nontrivial_h1(corpus); }},
      {"Graded bijection (reduced case)", [] { return graded_bijection(); }},
      {"Nilpotent counterexample", [] { return nilpotent_counterexample(); }},
      {"E-subgroup laws", [&] { return e_laws(corpus); }},
      {"Harrison/Sweedler bridge", [&] { return bridge(corpus); }},
      {"Oracle equivalence", [&] { return oracle_equivalence(corpus); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
