#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library's solvers; only its data types and field arithmetic are shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "coringlab/cohomology.hpp"

namespace oracle {

using namespace coringlab;

// Every coordinate vector of length n over F_p, first coordinate most significant.
inline std::vector<Vector> all_vectors(const Field& f, std::size_t n) {
  std::vector<Vector> out;
  const long p = f.characteristic();
  std::vector<long> digits(n, 0);
  while (true) {
    Vector v;
    for (long d : digits) v.push_back(Scalar(d));
    out.push_back(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++digits[i] < p) break;
      digits[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

inline std::vector<AlgElement> all_elements(const FinAlgebra& alg) {
  std::vector<AlgElement> out;
  for (auto& v : all_vectors(alg.field(), alg.dim())) out.push_back(AlgElement{v});
  return out;
}

// Product from the raw structure constants.
inline AlgElement mul(const FinAlgebra& alg, const AlgElement& a, const AlgElement& b) {
  const Field& f = alg.field();
  const std::size_t n = alg.dim();
  AlgElement c{Vector(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        c.coeffs[k] = f.add(c.coeffs[k], f.mul(f.mul(a.coeffs[i], b.coeffs[j]), alg.structure(i, j, k)));
  return c;
}

inline bool is_unit(const FinAlgebra& alg, const AlgElement& a) {
  for (const auto& b : all_elements(alg))
    if (mul(alg, a, b) == alg.one()) return true;
  return false;
}

inline std::vector<AlgElement> units(const FinAlgebra& alg) {
  std::vector<AlgElement> out;
  for (const auto& a : all_elements(alg))
    if (is_unit(alg, a)) out.push_back(a);
  return out;
}

// Coefficients in A of a sum over H (x) H basis pairs.
using PairMap = std::map<std::pair<HKey, HKey>, Vector>;

inline void accumulate(const Field& f, PairMap& m, std::pair<HKey, HKey> k, const Vector& v) {
  auto& slot = m[k];
  if (slot.empty()) slot.assign(v.size(), Scalar(0));
  for (std::size_t i = 0; i < v.size(); ++i) slot[i] = f.add(slot[i], v[i]);
  if (std::all_of(slot.begin(), slot.end(), [](const Scalar& s) { return sgn(s) == 0; })) m.erase(k);
}

// rho(a) from the grading degrees or the action matrices.
inline std::map<HKey, Vector> rho(const Coaction& co, const AlgElement& a) {
  const Field& f = co.algebra().field();
  const std::size_t n = co.algebra().dim();
  std::map<HKey, Vector> out;
  auto add = [&](HKey k, const Vector& v) {
    auto& slot = out[k];
    if (slot.empty()) slot.assign(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) slot[i] = f.add(slot[i], v[i]);
  };
  if (co.kind() == CoactionKind::Grading) {
    for (std::size_t i = 0; i < n; ++i) {
      Vector v(n);
      v[i] = a.coeffs[i];
      add(co.degrees()[i], v);
    }
  } else {
    for (std::size_t g = 0; g < co.matrices().size(); ++g) {
      const Matrix& m = co.matrices()[g];
      Vector v(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) v[r] = f.add(v[r], f.mul(m(r, c), a.coeffs[c]));
      add(static_cast<HKey>(g), v);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = std::all_of(it->second.begin(), it->second.end(), [](const Scalar& s) { return sgn(s) == 0; }) ? out.erase(it)
                                                                                                        : std::next(it);
  return out;
}

// Hopf structure straight from the group table.
inline std::optional<HKey> h_mul(const HopfDesc& h, HKey a, HKey b) {
  if (h.variant == HopfVariant::GroupBasis) return h.group.is_finite() ? h.group.table()[a][b] : a + b;
  if (a == b) return a;
  return std::nullopt;
}

inline std::vector<std::pair<HKey, HKey>> h_coproduct(const HopfDesc& h, HKey g) {
  if (h.variant == HopfVariant::GroupBasis) return {{g, g}};
  std::vector<std::pair<HKey, HKey>> out;
  const auto& t = h.group.table();
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y)
      if (t[x][y] == g) out.emplace_back(static_cast<HKey>(x), static_cast<HKey>(y));
  return out;
}

inline bool h_counit_one(const HopfDesc& h, HKey g) {
  if (h.variant == HopfVariant::GroupBasis) return true;
  const auto& t = h.group.table();
  return t[g][g] == g;  // identity is the unique idempotent of a group
}

// sum_i a_i (x) D(h_i) == sum_{i,j} a_i c (x) h_i m (x) h_j over (m, c) in
// rho(a_j), and sum_i a_i e(h_i) == 1.
inline bool grouplike(const CoringCtx& ctx, const std::map<HKey, AlgElement>& x) {
  const FinAlgebra& alg = ctx.algebra();
  const HopfDesc& h = ctx.hopf();
  const Field& f = alg.field();
  PairMap lhs, rhs;
  Vector counit(alg.dim());
  for (const auto& [hi, ai] : x) {
    for (const auto& kp : h_coproduct(h, hi)) accumulate(f, lhs, kp, ai.coeffs);
    if (h_counit_one(h, hi))
      for (std::size_t r = 0; r < alg.dim(); ++r) counit[r] = f.add(counit[r], ai.coeffs[r]);
  }
  for (const auto& [hj, aj] : x)
    for (const auto& [m, c] : rho(ctx.coaction, aj))
      for (const auto& [hi, ai] : x)
        if (auto him = h_mul(h, hi, m)) accumulate(f, rhs, {*him, hj}, mul(alg, ai, AlgElement{c}).coeffs);
  return lhs == rhs && counit == alg.one().coeffs;
}

// Every X supported on `keys` that satisfies the grouplike identities,
// found by trying all p^(n |keys|) coefficient tuples.
inline std::vector<CoringElement> grouplikes(const CoringCtx& ctx, const std::vector<HKey>& keys) {
  const FinAlgebra& alg = ctx.algebra();
  std::vector<CoringElement> out;
  for (const auto& v : all_vectors(alg.field(), alg.dim() * keys.size())) {
    std::map<HKey, AlgElement> x;
    CoringElement elem;
    for (std::size_t t = 0; t < keys.size(); ++t) {
      AlgElement a{Vector(v.begin() + static_cast<std::ptrdiff_t>(t * alg.dim()),
                          v.begin() + static_cast<std::ptrdiff_t>((t + 1) * alg.dim()))};
      if (a.is_zero()) continue;
      x.emplace(keys[t], a);
      elem.add_term(alg, keys[t], a);
    }
    if (grouplike(ctx, x)) out.push_back(elem);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All homomorphisms G -> F_p^*, by filtering every function.
inline std::vector<std::vector<Scalar>> characters(const HopfDesc& h) {
  const Field& f = h.field;
  const auto& t = h.group.table();
  const std::size_t n = t.size();
  std::vector<Scalar> nonzero;
  for (long v = 1; v < f.characteristic(); ++v) nonzero.push_back(Scalar(v));
  std::vector<std::vector<Scalar>> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Scalar> chi;
    for (auto i : idx) chi.push_back(nonzero[i]);
    bool hom = true;
    for (std::size_t a = 0; a < n && hom; ++a)
      for (std::size_t b = 0; b < n && hom; ++b) hom = chi[t[a][b]] == f.mul(chi[a], chi[b]);
    if (hom) out.push_back(chi);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++idx[i] < nonzero.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

// All functions phi: G -> A with phi(e) = 1 and phi(gh) = (g.phi(h)) phi(g).
inline std::vector<std::vector<AlgElement>> sweedler_cocycles(const CoringCtx& ctx) {
  const FinAlgebra& alg = ctx.algebra();
  const auto& t = ctx.hopf().group.table();
  const std::size_t n = t.size();
  const auto elems = all_elements(alg);
  auto act = [&](std::size_t g, const AlgElement& a) {
    const Matrix& m = ctx.coaction.matrices()[g];
    AlgElement out{Vector(alg.dim())};
    for (std::size_t r = 0; r < alg.dim(); ++r)
      for (std::size_t c = 0; c < alg.dim(); ++c)
        out.coeffs[r] = alg.field().add(out.coeffs[r], alg.field().mul(m(r, c), a.coeffs[c]));
    return out;
  };
  std::vector<std::vector<AlgElement>> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<AlgElement> phi;
    for (auto i : idx) phi.push_back(elems[i]);
    bool ok = phi[static_cast<std::size_t>(ctx.hopf().group.identity())] == alg.one();
    for (std::size_t g = 0; g < n && ok; ++g)
      for (std::size_t h = 0; h < n && ok; ++h) ok = phi[t[g][h]] == mul(alg, act(g, phi[h]), phi[g]);
    if (ok) out.push_back(phi);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++idx[i] < elems.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

// Determinant by cofactor expansion (small matrices only).
inline BigInt det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    const BigInt term = m(0, c) * det(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}, where
// D_k is the gcd of the k x k minors. Zeros pad to min(rows, cols).
inline std::vector<BigInt> determinantal_invariants(const IntMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    BigInt g = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        IntMatrix sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(ri[a], ci[b]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), BigInt(det(sub)).get_mpz_t());
      }
    if (sgn(g) == 0) {
      while (out.size() < r) out.push_back(0);
      return out;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// |{a : a sigma(a) = 1}| for sigma(a) = a^p, by direct multiplication.
inline std::size_t norm_kernel_size(const FinAlgebra& alg) {
  std::size_t count = 0;
  for (const auto& a : all_elements(alg)) {
    AlgElement frob = alg.one();
    for (long i = 0; i < alg.field().characteristic(); ++i) frob = mul(alg, frob, a);
    if (mul(alg, a, frob) == alg.one()) ++count;
  }
  return count;
}

}  // namespace oracle
