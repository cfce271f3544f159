#include "coringlab/hopf.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "coringlab/error.hpp"

namespace coringlab {

DegreeWindow DegreeWindow::symmetric() const {
  const std::int64_t r = std::max({hi, -lo, lo, -hi});
  return {-r, r};
}

std::string DegreeWindow::str() const { return std::to_string(lo) + ".." + std::to_string(hi); }

std::vector<HKey> HopfDesc::keys() const {
  if (!is_finite()) throw VariantError("kZ has infinitely many basis elements; use a degree window");
  std::vector<HKey> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = static_cast<HKey>(i);
  return out;
}

std::vector<HKey> HopfDesc::keys_in(const DegreeWindow& window) const {
  if (is_finite()) return keys();
  std::vector<HKey> out;
  for (std::int64_t d = window.lo; d <= window.hi; ++d) out.push_back(d);
  return out;
}

std::vector<KeyPair> HopfDesc::coproduct(HKey h) const {
  if (is_finite()) return comult.at(static_cast<std::size_t>(h));
  return {{h, h}};
}

std::optional<HKey> HopfDesc::product(HKey a, HKey b) const {
  if (variant == HopfVariant::GroupBasis) return group.op(a, b);
  if (a == b) return a;
  return std::nullopt;
}

Scalar HopfDesc::counit(HKey h) const {
  if (variant == HopfVariant::GroupBasis) return 1;
  return h == group.identity() ? 1 : 0;
}

std::vector<HKey> HopfDesc::unit() const {
  if (variant == HopfVariant::GroupBasis) return {group.identity()};
  return keys();
}

HKey HopfDesc::antipode(HKey h) const { return group.inverse(h); }

std::string HopfDesc::key_name(HKey h) const {
  if (variant == HopfVariant::DualGroup) return "p_" + group.name(h);
  if (!is_finite()) {
    if (h == 0) return "1";
    return "X^" + std::to_string(h);
  }
  return group.name(h);
}

namespace {

void check_group(const GroupSpec& group) {
  auto problems = validate_group(group);
  if (!problems.empty()) throw ValidationError("invalid group table: " + problems.front());
}

}  // namespace

HopfDesc make_group_basis_hopf(const Field& field, const GroupSpec& group) {
  check_group(group);
  if (!group.is_abelian()) throw VariantError("kG is commutative only for abelian G");
  HopfDesc h{field, HopfVariant::GroupBasis, group, {}};
  if (group.is_finite())
    for (HKey g = 0; g < static_cast<HKey>(group.order()); ++g) h.comult.push_back({{g, g}});
  return h;
}

HopfDesc make_dual_group_hopf(const Field& field, const GroupSpec& group) {
  if (!group.is_finite()) throw VariantError("the dual k^G needs a finite group");
  check_group(group);
  HopfDesc h{field, HopfVariant::DualGroup, group, {}};
  const auto m = static_cast<HKey>(group.order());
  for (HKey g = 0; g < m; ++g) {
    std::vector<KeyPair> terms;
    for (HKey x = 0; x < m; ++x) terms.emplace_back(x, group.op(group.inverse(x), g));
    h.comult.push_back(std::move(terms));
  }
  return h;
}

namespace {

using Tensor2 = std::map<KeyPair, Scalar>;
using Tensor3 = std::map<std::tuple<HKey, HKey, HKey>, Scalar>;

template <typename Map, typename Key>
void accumulate(const Field& f, Map& m, const Key& k, const Scalar& v) {
  if (Field::is_zero(v)) return;
  auto [it, inserted] = m.try_emplace(k, v);
  if (!inserted) {
    it->second = f.add(it->second, v);
    if (Field::is_zero(it->second)) m.erase(it);
  }
}

HElement unit_element(const HopfDesc& h) {
  HElement u;
  for (HKey k : h.unit()) accumulate(h.field, u, k, Scalar(1));
  return u;
}

std::string describe(const HopfDesc& h, HKey k) { return h.key_name(k); }

}  // namespace

ValidationReport validate_bialgebra(const HopfDesc& hopf, const DegreeWindow& window) {
  ValidationReport report;
  const Field& f = hopf.field;
  const std::vector<HKey> keys = hopf.keys_in(window);
  auto fail = [&](const std::string& law, const std::string& witness) {
    for (const auto& v : report.violations)
      if (v.law == law) return;
    report.violations.push_back({law, witness});
  };

  for (HKey h : keys) {
    const auto delta = hopf.coproduct(h);
    Tensor3 left, right;
    for (const auto& [a, b] : delta) {
      for (const auto& [a1, a2] : hopf.coproduct(a)) accumulate(f, left, std::make_tuple(a1, a2, b), Scalar(1));
      for (const auto& [b1, b2] : hopf.coproduct(b)) accumulate(f, right, std::make_tuple(a, b1, b2), Scalar(1));
    }
    if (left != right) fail("coassociativity", "(D(x)id)D != (id(x)D)D at " + describe(hopf, h));

    HElement via_left, via_right;
    for (const auto& [a, b] : delta) {
      accumulate(f, via_left, b, hopf.counit(a));
      accumulate(f, via_right, a, hopf.counit(b));
    }
    const HElement expected{{h, Scalar(1)}};
    if (via_left != expected) fail("left counit", "(e(x)id)D != id at " + describe(hopf, h));
    if (via_right != expected) fail("right counit", "(id(x)e)D != id at " + describe(hopf, h));

    HElement s_left, s_right;
    for (const auto& [a, b] : delta) {
      if (auto p = hopf.product(hopf.antipode(a), b)) accumulate(f, s_left, *p, Scalar(1));
      if (auto p = hopf.product(a, hopf.antipode(b))) accumulate(f, s_right, *p, Scalar(1));
    }
    HElement eps_one;
    if (!Field::is_zero(hopf.counit(h)))
      for (const auto& [k, v] : unit_element(hopf)) accumulate(f, eps_one, k, f.mul(v, hopf.counit(h)));
    if (s_left != eps_one || s_right != eps_one) fail("antipode", "S(h1)h2 != e(h)1 at " + describe(hopf, h));

    for (HKey k : keys) {
      Tensor2 lhs, rhs;
      auto hk = hopf.product(h, k);
      if (hk)
        for (const auto& pr : hopf.coproduct(*hk)) accumulate(f, lhs, pr, Scalar(1));
      for (const auto& [a1, a2] : delta)
        for (const auto& [b1, b2] : hopf.coproduct(k)) {
          auto p1 = hopf.product(a1, b1);
          auto p2 = hopf.product(a2, b2);
          if (p1 && p2) accumulate(f, rhs, KeyPair{*p1, *p2}, Scalar(1));
        }
      if (lhs != rhs)
        fail("multiplicative comultiplication", "D(hk) != D(h)D(k) at (" + describe(hopf, h) + "," +
                                                    describe(hopf, k) + ")");
      const Scalar ehk = hk ? hopf.counit(*hk) : Scalar(0);
      if (ehk != f.mul(hopf.counit(h), hopf.counit(k)))
        fail("multiplicative counit", "e(hk) != e(h)e(k) at (" + describe(hopf, h) + "," + describe(hopf, k) + ")");
    }
  }

  // D(1) = 1 (x) 1 and e(1) = 1.
  const HElement one = unit_element(hopf);
  Tensor2 d_one, one_one;
  Scalar e_one = 0;
  for (const auto& [k, v] : one) {
    for (const auto& pr : hopf.coproduct(k)) accumulate(f, d_one, pr, v);
    e_one = f.add(e_one, f.mul(v, hopf.counit(k)));
  }
  for (const auto& [a, va] : one)
    for (const auto& [b, vb] : one) accumulate(f, one_one, KeyPair{a, b}, f.mul(va, vb));
  if (d_one != one_one) fail("unit comultiplication", "D(1) != 1(x)1");
  if (e_one != Scalar(1)) fail("unit counit", "e(1) != 1");
  return report;
}

HElement as_element(const HopfDesc& hopf, const HopfGrouplike& g) {
  HElement out;
  if (hopf.variant == HopfVariant::GroupBasis) {
    out[g.element] = 1;
    return out;
  }
  for (std::size_t i = 0; i < g.character.size(); ++i)
    accumulate(hopf.field, out, static_cast<HKey>(i), g.character[i]);
  return out;
}

std::vector<HopfGrouplike> grouplikes_of_hopf(const HopfDesc& hopf, const DegreeWindow& window) {
  std::vector<HopfGrouplike> out;
  if (hopf.variant == HopfVariant::GroupBasis) {
    for (HKey k : hopf.keys_in(window)) out.push_back(HopfGrouplike{k, {}});
    return out;
  }
  const Field& f = hopf.field;
  if (!f.is_prime_field()) throw VariantError("character enumeration needs a prime field");
  const GroupSpec& g = hopf.group;
  const std::size_t m = g.order();
  std::vector<Scalar> chi(m);
  std::vector<bool> assigned(m, false);
  const auto e = static_cast<std::size_t>(g.identity());
  chi[e] = 1;
  assigned[e] = true;

  auto consistent = [&]() {
    for (std::size_t a = 0; a < m; ++a) {
      if (!assigned[a]) continue;
      for (std::size_t b = 0; b < m; ++b) {
        if (!assigned[b]) continue;
        const auto ab = static_cast<std::size_t>(g.op(static_cast<HKey>(a), static_cast<HKey>(b)));
        if (assigned[ab] && chi[ab] != f.mul(chi[a], chi[b])) return false;
      }
    }
    return true;
  };
  std::function<void(std::size_t)> search = [&](std::size_t idx) {
    if (idx == m) {
      out.push_back(HopfGrouplike{0, chi});
      return;
    }
    if (assigned[idx]) {
      search(idx + 1);
      return;
    }
    assigned[idx] = true;
    for (std::uint64_t v = 1; v < f.size(); ++v) {
      chi[idx] = f.element(v);
      if (consistent()) search(idx + 1);
    }
    assigned[idx] = false;
    chi[idx] = 0;
  };
  search(0);
  return out;
}

}  // namespace coringlab
