#include "coringlab/coring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "coringlab/error.hpp"

namespace coringlab {

std::string to_string(Invertibility inv) {
  switch (inv) {
    case Invertibility::Yes:
      return "yes";
    case Invertibility::No:
      return "no";
    case Invertibility::UnknownWithinWindow:
      return "unknown-within-window";
  }
  return "?";
}

namespace {

using PairMap = std::map<KeyPair, AlgElement>;

void put(const FinAlgebra& alg, PairMap& m, const KeyPair& k, const AlgElement& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, v);
  if (!inserted) {
    it->second = alg.add(it->second, v);
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

GrouplikeCheck is_grouplike(const CoringCtx& ctx, const CoringElement& x) {
  const FinAlgebra& alg = ctx.algebra();
  const HopfDesc& hopf = ctx.hopf();

  AlgElement counit = alg.zero();
  for (const auto& [h, a] : x.terms()) counit = alg.add(counit, alg.scale(hopf.counit(h), a));
  if (counit != alg.one()) return {false, "counit: sum a_i e(h_i) = " + alg.format(counit) + " != 1"};

  PairMap lhs, rhs;
  for (const auto& [h, a] : x.terms())
    for (const auto& pr : hopf.coproduct(h)) put(alg, lhs, pr, a);
  for (const auto& [hj, aj] : x.terms()) {
    const CoringElement rho_aj = ctx.coaction.rho(aj);
    for (const auto& [hi, ai] : x.terms())
      for (const auto& [m, c] : rho_aj.terms())
        if (auto k = hopf.product(hi, m)) put(alg, rhs, {*k, hj}, alg.mul(ai, c));
  }
  if (lhs == rhs) return {true, {}};

  std::set<KeyPair> keys;
  for (const auto& [k, v] : lhs) keys.insert(k);
  for (const auto& [k, v] : rhs) keys.insert(k);
  for (const auto& k : keys) {
    auto l = lhs.count(k) ? lhs.at(k) : alg.zero();
    auto r = rhs.count(k) ? rhs.at(k) : alg.zero();
    if (l != r)
      return {false, "comultiplication at " + hopf.key_name(k.first) + "(x)" + hopf.key_name(k.second) + ": " +
                         alg.format(l) + " != " + alg.format(r)};
  }
  return {false, "comultiplication"};
}

CoringElement coring_mul(const CoringCtx& ctx, const CoringElement& x, const CoringElement& y) {
  return multiply(ctx.algebra(), ctx.hopf(), x, y);
}

InverseResult try_invert_coring(const CoringCtx& ctx, const CoringElement& x, const DegreeWindow& window) {
  const FinAlgebra& alg = ctx.algebra();
  const HopfDesc& hopf = ctx.hopf();
  const std::size_t n = alg.dim();
  const std::vector<HKey> keys = hopf.keys_in(window);

  // Columns: unknown coefficient r of Y at keys[t]. Rows: (target key, coordinate).
  std::vector<CoringElement> images;
  for (HKey k : keys)
    for (std::size_t r = 0; r < n; ++r) images.push_back(coring_mul(ctx, x, CoringElement::single(k, alg.basis(r))));
  const CoringElement one = coring_one(alg, hopf);
  std::set<HKey> target_set;
  for (const auto& img : images)
    for (const auto& [k, c] : img.terms()) target_set.insert(k);
  for (const auto& [k, c] : one.terms()) target_set.insert(k);
  const std::vector<HKey> targets(target_set.begin(), target_set.end());

  Matrix m(targets.size() * n, images.size());
  Vector rhs(targets.size() * n);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    for (std::size_t col = 0; col < images.size(); ++col) {
      const AlgElement c = images[col].coeff(alg, targets[t]);
      for (std::size_t r = 0; r < n; ++r) m(t * n + r, col) = c.coeffs[r];
    }
    const AlgElement o = one.coeff(alg, targets[t]);
    for (std::size_t r = 0; r < n; ++r) rhs[t * n + r] = o.coeffs[r];
  }
  LinearSolution sol = solve_linear(alg.field(), m, rhs);
  if (!sol.particular) return {hopf.is_finite() ? Invertibility::No : Invertibility::UnknownWithinWindow, {}};
  CoringElement y;
  for (std::size_t t = 0; t < keys.size(); ++t) {
    AlgElement c = alg.zero();
    for (std::size_t r = 0; r < n; ++r) c.coeffs[r] = (*sol.particular)[t * n + r];
    y.add_term(alg, keys[t], c);
  }
  return {Invertibility::Yes, std::move(y)};
}

namespace {

class SearchBudget {
 public:
  explicit SearchBudget(std::uint64_t cap) : cap_(cap) {}
  void tick() {
    if (++visited_ > cap_) throw BoundError("grouplike search exceeded " + std::to_string(cap_) + " nodes");
  }

 private:
  std::uint64_t cap_;
  std::uint64_t visited_ = 0;
};

// Grouplikes of A (x) kM for a grading: X = sum_j a_j (x) j is grouplike iff
// sum a_j = 1 and, for every j and every k,
//   sum_{m} a_{k m^{-1}} a_j^{(m)} = [k = j] a_j,
// where a_j^{(m)} is the degree-m component of a_j.
std::vector<CoringElement> solve_graded(const CoringCtx& ctx, const EnumerationBounds& bounds) {
  const FinAlgebra& alg = ctx.algebra();
  const GroupSpec& group = ctx.hopf().group;
  const std::vector<HKey> keys = ctx.hopf().keys_in(bounds.window);
  const std::vector<AlgElement> candidates = enumerate_elements(alg, bounds.element_cap);

  std::vector<std::map<HKey, AlgElement>> components;
  components.reserve(candidates.size());
  for (const auto& c : candidates) components.push_back(ctx.coaction.rho(c).terms());

  const std::size_t w = keys.size();
  std::map<HKey, std::size_t> position;
  for (std::size_t t = 0; t < w; ++t) position[keys[t]] = t;
  std::vector<std::size_t> choice(w, 0);
  std::size_t assigned = 0;

  // Value of a_i, or empty if i is in the window but not yet assigned.
  auto value = [&](HKey i) -> std::optional<AlgElement> {
    auto it = position.find(i);
    if (it == position.end()) return alg.zero();
    if (it->second >= assigned) return std::nullopt;
    return candidates[choice[it->second]];
  };

  auto equations_hold = [&](std::size_t newest) {
    for (std::size_t jt = 0; jt < assigned; ++jt) {
      const HKey j = keys[jt];
      const auto& comp = components[choice[jt]];
      std::set<HKey> ks{j};
      for (const auto& [m, c] : comp)
        for (HKey i : keys) ks.insert(group.op(i, m));
      for (HKey k : ks) {
        bool involves_newest = jt == newest;
        bool complete = true;
        AlgElement sum = alg.zero();
        for (const auto& [m, c] : comp) {
          const HKey i = group.op(k, group.inverse(m));
          auto pos = position.find(i);
          if (pos != position.end() && pos->second == newest) involves_newest = true;
          auto ai = value(i);
          if (!ai) {
            complete = false;
            break;
          }
          sum = alg.add(sum, alg.mul(*ai, c));
        }
        if (!complete || !involves_newest) continue;
        const AlgElement expected = k == j ? candidates[choice[jt]] : alg.zero();
        if (sum != expected) return false;
      }
    }
    return true;
  };

  std::vector<CoringElement> out;
  SearchBudget budget(bounds.search_cap);
  std::function<void(std::size_t)> search = [&](std::size_t t) {
    budget.tick();
    if (t == w) {
      AlgElement total = alg.zero();
      for (std::size_t s = 0; s < w; ++s) total = alg.add(total, candidates[choice[s]]);
      if (total != alg.one()) return;
      CoringElement x;
      for (std::size_t s = 0; s < w; ++s) x.add_term(alg, keys[s], candidates[choice[s]]);
      out.push_back(std::move(x));
      return;
    }
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      choice[t] = c;
      assigned = t + 1;
      if (equations_hold(t)) search(t + 1);
    }
    assigned = t;
  };
  search(0);
  return out;
}

// Grouplikes of A (x) k^G: X = sum_g phi(g) (x) p_g is grouplike iff
// phi(e) = 1 and phi(xy) = (x.phi(y)) phi(x) for all x, y.
std::vector<CoringElement> solve_dual(const CoringCtx& ctx, const EnumerationBounds& bounds) {
  const FinAlgebra& alg = ctx.algebra();
  const GroupSpec& group = ctx.hopf().group;
  const std::size_t m = group.order();
  const std::vector<AlgElement> candidates = enumerate_elements(alg, bounds.element_cap);

  std::vector<std::optional<AlgElement>> phi(m);
  phi[static_cast<std::size_t>(group.identity())] = alg.one();

  auto consistent = [&](std::size_t newest) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        const auto xy = static_cast<std::size_t>(group.op(static_cast<HKey>(x), static_cast<HKey>(y)));
        if (x != newest && y != newest && xy != newest) continue;
        if (!phi[x] || !phi[y] || !phi[xy]) continue;
        if (*phi[xy] != alg.mul(ctx.coaction.act(static_cast<HKey>(x), *phi[y]), *phi[x])) return false;
      }
    return true;
  };

  std::vector<CoringElement> out;
  SearchBudget budget(bounds.search_cap);
  std::function<void(std::size_t)> search = [&](std::size_t g) {
    budget.tick();
    if (g == m) {
      CoringElement x;
      for (std::size_t s = 0; s < m; ++s) x.add_term(alg, static_cast<HKey>(s), *phi[s]);
      out.push_back(std::move(x));
      return;
    }
    if (g == static_cast<std::size_t>(group.identity())) {
      if (consistent(g)) search(g + 1);
      return;
    }
    for (const auto& c : candidates) {
      phi[g] = c;
      if (consistent(g)) search(g + 1);
    }
    phi[g].reset();
  };
  search(0);
  return out;
}

}  // namespace

std::vector<Grouplike> enumerate_grouplikes(const CoringCtx& ctx, const EnumerationBounds& bounds) {
  if (!ctx.field().is_prime_field()) throw VariantError("grouplike enumeration needs a prime field");
  std::vector<CoringElement> found = ctx.coaction.kind() == CoactionKind::Grading ? solve_graded(ctx, bounds)
                                                                                   : solve_dual(ctx, bounds);
  std::sort(found.begin(), found.end());
  std::vector<Grouplike> out;
  const DegreeWindow inverse_window = bounds.window.symmetric();
  for (auto& x : found) {
    InverseResult inv = try_invert_coring(ctx, x, inverse_window);
    out.push_back(Grouplike{std::move(x), inv.status, std::move(inv.inverse)});
  }
  return out;
}

namespace {

void require_grading(const CoringCtx& ctx) {
  if (ctx.coaction.kind() != CoactionKind::Grading)
    throw VariantError("idempotent-degree maps need a grading over a group-basis Hopf algebra");
}

bool homogeneous_of_identity(const CoringCtx& ctx, const AlgElement& a) {
  return ctx.coaction.rho(a) == CoringElement::single(ctx.hopf().group.identity(), a);
}

// Empty string when the family is a complete orthogonal family of nonzero
// degree-0 idempotents, otherwise the reason it is not.
std::string family_problem(const CoringCtx& ctx, const std::vector<AlgElement>& es) {
  const FinAlgebra& alg = ctx.algebra();
  AlgElement total = alg.zero();
  for (std::size_t i = 0; i < es.size(); ++i) {
    const AlgElement& e = es[i];
    if (e.is_zero()) return "idempotent " + std::to_string(i) + " is zero";
    if (alg.mul(e, e) != e) return alg.format(e) + " is not idempotent";
    if (!homogeneous_of_identity(ctx, e)) return alg.format(e) + " is not homogeneous of degree 0";
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (!alg.mul(e, es[j]).is_zero()) return alg.format(e) + " and " + alg.format(es[j]) + " are not orthogonal";
    total = alg.add(total, e);
  }
  if (total != alg.one()) return "idempotents sum to " + alg.format(total) + ", not 1";
  return {};
}

}  // namespace

Grouplike grouplike_from_idempotent_degrees(const CoringCtx& ctx, const IdempotentDegreeMap& map) {
  require_grading(ctx);
  const FinAlgebra& alg = ctx.algebra();
  const GroupSpec& group = ctx.hopf().group;
  std::vector<AlgElement> es;
  std::set<HKey> degrees;
  for (const auto& [e, d] : map.parts) {
    es.push_back(e);
    if (!degrees.insert(d).second) throw ValidationError("degree " + ctx.hopf().key_name(d) + " used twice");
  }
  if (auto problem = family_problem(ctx, es); !problem.empty()) throw ValidationError(problem);
  CoringElement x, inv;
  for (const auto& [e, d] : map.parts) {
    x.add_term(alg, d, e);
    inv.add_term(alg, group.inverse(d), e);
  }
  return Grouplike{std::move(x), Invertibility::Yes, std::move(inv)};
}

std::optional<IdempotentDegreeMap> idempotent_degrees_of_grouplike(const CoringCtx& ctx, const CoringElement& x) {
  require_grading(ctx);
  IdempotentDegreeMap map;
  std::vector<AlgElement> es;
  for (const auto& [k, a] : x.terms()) {
    map.parts.emplace_back(a, k);
    es.push_back(a);
  }
  if (!family_problem(ctx, es).empty()) return std::nullopt;
  return map;
}

std::vector<IdempotentDegreeMap> enumerate_idempotent_degree_maps(const CoringCtx& ctx,
                                                                  const EnumerationBounds& bounds) {
  require_grading(ctx);
  const FinAlgebra& alg = ctx.algebra();
  std::vector<AlgElement> pieces;
  for (auto& e : enumerate_idempotents(alg, bounds.element_cap))
    if (!e.is_zero() && homogeneous_of_identity(ctx, e)) pieces.push_back(std::move(e));
  const std::vector<HKey> keys = ctx.hopf().keys_in(bounds.window);

  std::vector<IdempotentDegreeMap> out;
  IdempotentDegreeMap current;
  SearchBudget budget(bounds.search_cap);
  std::function<void(std::size_t, const AlgElement&)> search = [&](std::size_t t, const AlgElement& covered) {
    budget.tick();
    if (covered == alg.one()) {
      out.push_back(current);
      return;
    }
    if (t == keys.size()) return;
    search(t + 1, covered);
    for (const auto& e : pieces) {
      if (!alg.mul(e, covered).is_zero()) continue;
      current.parts.emplace_back(e, keys[t]);
      search(t + 1, alg.add(covered, e));
      current.parts.pop_back();
    }
  };
  search(0, alg.zero());
  return out;
}

Grouplike induced_grouplike(const CoringCtx& ctx, const HopfGrouplike& g) {
  const FinAlgebra& alg = ctx.algebra();
  const HopfDesc& hopf = ctx.hopf();
  if (hopf.variant == HopfVariant::GroupBasis) {
    return Grouplike{CoringElement::single(g.element, alg.one()), Invertibility::Yes,
                     CoringElement::single(hopf.group.inverse(g.element), alg.one())};
  }
  const Field& f = alg.field();
  CoringElement x, inv;
  for (std::size_t s = 0; s < g.character.size(); ++s) {
    x.add_term(alg, static_cast<HKey>(s), alg.scale(g.character[s], alg.one()));
    inv.add_term(alg, static_cast<HKey>(s), alg.scale(f.inv(g.character[s]), alg.one()));
  }
  return Grouplike{std::move(x), Invertibility::Yes, std::move(inv)};
}

}  // namespace coringlab
