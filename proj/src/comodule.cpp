#include "coringlab/comodule.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "coringlab/error.hpp"

namespace coringlab {

Coaction::Coaction(FinAlgebra alg, HopfDesc hopf, CoactionKind kind)
    : alg_(std::move(alg)), hopf_(std::move(hopf)), kind_(kind) {}

Coaction Coaction::grading(FinAlgebra alg, HopfDesc hopf, std::vector<HKey> degrees) {
  if (degrees.size() != alg.dim())
    throw DimensionError("expected " + std::to_string(alg.dim()) + " degrees, got " + std::to_string(degrees.size()));
  Coaction co(std::move(alg), std::move(hopf), CoactionKind::Grading);
  co.degrees_ = std::move(degrees);
  co.build();
  return co;
}

Coaction Coaction::action(FinAlgebra alg, HopfDesc hopf, std::vector<Matrix> matrices) {
  if (matrices.size() != hopf.dim())
    throw DimensionError("expected one matrix per group element (" + std::to_string(hopf.dim()) + "), got " +
                         std::to_string(matrices.size()));
  for (const auto& m : matrices)
    if (m.rows() != alg.dim() || m.cols() != alg.dim()) throw DimensionError("action matrix has wrong shape");
  Coaction co(std::move(alg), std::move(hopf), CoactionKind::Action);
  co.matrices_ = std::move(matrices);
  for (auto& m : co.matrices_)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = co.alg_.field().from_rational(m(r, c));
  co.build();
  return co;
}

void Coaction::build() {
  rho_basis_.clear();
  for (std::size_t i = 0; i < alg_.dim(); ++i) {
    if (kind_ == CoactionKind::Grading) {
      rho_basis_.push_back(CoringElement::single(degrees_[i], alg_.basis(i)));
    } else {
      CoringElement x;
      for (std::size_t g = 0; g < matrices_.size(); ++g)
        x.add_term(alg_, static_cast<HKey>(g), AlgElement{matrices_[g].column(i)});
      rho_basis_.push_back(std::move(x));
    }
  }
}

CoringElement Coaction::rho(const AlgElement& a) const {
  if (a.size() != alg_.dim()) throw DimensionError("element has wrong length for the coaction");
  CoringElement out;
  for (std::size_t i = 0; i < alg_.dim(); ++i) {
    if (Field::is_zero(a.coeffs[i])) continue;
    for (const auto& [k, c] : rho_basis_[i].terms()) out.add_term(alg_, k, alg_.scale(a.coeffs[i], c));
  }
  return out;
}

CoringElement Coaction::right_act(const CoringElement& x, const AlgElement& a) const {
  return multiply(alg_, hopf_, x, rho(a));
}

AlgElement Coaction::act(HKey g, const AlgElement& a) const {
  if (kind_ != CoactionKind::Action) throw VariantError("group action requested from a grading");
  return AlgElement{apply(alg_.field(), matrices_.at(static_cast<std::size_t>(g)), a.coeffs)};
}

std::vector<HKey> Coaction::occurring_keys() const {
  std::set<HKey> keys;
  for (const auto& x : rho_basis_)
    for (const auto& [k, c] : x.terms()) keys.insert(k);
  return {keys.begin(), keys.end()};
}

Coaction coaction_from_grading(FinAlgebra alg, HopfDesc hopf, std::vector<HKey> degrees) {
  if (hopf.variant != HopfVariant::GroupBasis) throw VariantError("a grading needs a group-basis Hopf algebra");
  const std::size_t n = alg.dim();
  if (degrees.size() != n)
    throw DimensionError("expected " + std::to_string(n) + " degrees, got " + std::to_string(degrees.size()));
  if (hopf.is_finite())
    for (HKey d : degrees)
      if (d < 0 || d >= static_cast<HKey>(hopf.dim()))
        throw ValidationError("degree " + std::to_string(d) + " is not a group element");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!Field::is_zero(alg.structure(i, j, k)) && degrees[k] != hopf.group.op(degrees[i], degrees[j]))
          throw ValidationError("grading is not homogeneous: c_{" + std::to_string(i) + "," + std::to_string(j) +
                                "}^" + std::to_string(k) + " != 0 but deg(e" + std::to_string(k) + ")=" +
                                hopf.key_name(degrees[k]) + " differs from deg(e" + std::to_string(i) + ")deg(e" +
                                std::to_string(j) + ")=" + hopf.key_name(hopf.group.op(degrees[i], degrees[j])));
  const AlgElement one = alg.one();
  for (std::size_t i = 0; i < n; ++i)
    if (!Field::is_zero(one.coeffs[i]) && degrees[i] != hopf.group.identity())
      throw ValidationError("the unit is not homogeneous of degree " + hopf.key_name(hopf.group.identity()));
  return Coaction::grading(std::move(alg), std::move(hopf), std::move(degrees));
}

Coaction coaction_from_action(FinAlgebra alg, HopfDesc hopf, std::vector<Matrix> matrices) {
  if (hopf.variant != HopfVariant::DualGroup) throw VariantError("a group action needs the dual Hopf algebra k^G");
  Coaction co = Coaction::action(std::move(alg), std::move(hopf), std::move(matrices));
  const FinAlgebra& a = co.algebra();
  const Field& f = a.field();
  const GroupSpec& g = co.hopf().group;
  const std::size_t n = a.dim();
  for (std::size_t s = 0; s < g.order(); ++s) {
    const auto key = static_cast<HKey>(s);
    const std::string who = "action of " + g.name(key);
    if (co.act(key, a.one()) != a.one()) throw ValidationError(who + " does not fix 1");
    if (rank(f, co.matrices()[s]) != n) throw ValidationError(who + " is not invertible");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const AlgElement lhs = co.act(key, a.mul(a.basis(i), a.basis(j)));
        const AlgElement rhs = a.mul(co.act(key, a.basis(i)), co.act(key, a.basis(j)));
        if (lhs != rhs)
          throw ValidationError(who + " is not multiplicative at (e" + std::to_string(i) + ",e" + std::to_string(j) +
                                ")");
      }
  }
  if (co.matrices()[static_cast<std::size_t>(g.identity())] != Matrix::identity(n))
    throw ValidationError("the identity element does not act trivially");
  for (std::size_t s = 0; s < g.order(); ++s)
    for (std::size_t t = 0; t < g.order(); ++t) {
      const auto st = static_cast<std::size_t>(g.op(static_cast<HKey>(s), static_cast<HKey>(t)));
      if (multiply(f, co.matrices()[s], co.matrices()[t]) != co.matrices()[st])
        throw ValidationError("action is not a homomorphism at (" + g.name(static_cast<HKey>(s)) + "," +
                              g.name(static_cast<HKey>(t)) + ")");
    }
  return co;
}

Coaction identity_coaction(FinAlgebra alg, HopfDesc hopf) {
  const std::size_t n = alg.dim();
  if (hopf.variant == HopfVariant::GroupBasis) {
    const HKey e = hopf.group.identity();
    return Coaction::grading(std::move(alg), std::move(hopf), std::vector<HKey>(n, e));
  }
  const std::size_t m = hopf.dim();
  return Coaction::action(std::move(alg), std::move(hopf), std::vector<Matrix>(m, Matrix::identity(n)));
}

ValidationReport validate_comodule_algebra(const Coaction& co) {
  ValidationReport report;
  const FinAlgebra& a = co.algebra();
  const HopfDesc& h = co.hopf();
  const std::size_t n = a.dim();
  auto e = [](std::size_t i) { return "e" + std::to_string(i); };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const CoringElement lhs = co.rho(a.mul(a.basis(i), a.basis(j)));
      const CoringElement rhs = multiply(a, h, co.rho_basis(i), co.rho_basis(j));
      if (lhs != rhs) {
        report.violations.push_back({"multiplicativity", "rho(" + e(i) + e(j) + ") != rho(" + e(i) + ")rho(" + e(j) +
                                                             "): " + format(a, h, lhs) + " vs " + format(a, h, rhs)});
        goto multiplicativity_done;
      }
    }
multiplicativity_done:
  if (co.rho(a.one()) != coring_one(a, h)) report.violations.push_back({"unit", "rho(1) != 1(x)1"});

  for (std::size_t i = 0; i < n; ++i) {
    AlgElement sum = a.zero();
    for (const auto& [k, c] : co.rho_basis(i).terms()) sum = a.add(sum, a.scale(h.counit(k), c));
    if (sum != a.basis(i)) {
      report.violations.push_back({"counit", "(id(x)e)rho(" + e(i) + ") = " + a.format(sum)});
      break;
    }
  }

  using Key3 = std::pair<HKey, HKey>;
  for (std::size_t i = 0; i < n; ++i) {
    std::map<Key3, AlgElement> lhs, rhs;
    auto put = [&](std::map<Key3, AlgElement>& m, Key3 k, const AlgElement& v) {
      auto [it, inserted] = m.try_emplace(k, v);
      if (!inserted) it->second = a.add(it->second, v);
      if (it->second.is_zero()) m.erase(it);
    };
    for (const auto& [hk, c] : co.rho_basis(i).terms()) {
      const CoringElement inner = co.rho(c);
      for (const auto& [k2, c2] : inner.terms()) put(lhs, {k2, hk}, c2);
      for (const auto& [h1, h2] : h.coproduct(hk)) put(rhs, {h1, h2}, c);
    }
    if (lhs != rhs) {
      report.violations.push_back({"coassociativity", "(rho(x)id)rho != (id(x)D)rho at " + e(i)});
      break;
    }
  }
  return report;
}

namespace {

// Matrix of the linear map A -> A (x) span(keys), a -> f(a), in coordinates
// ordered (key, basis index).
Matrix coring_map_matrix(const FinAlgebra& alg, const std::vector<HKey>& keys,
                         const std::vector<CoringElement>& images) {
  const std::size_t n = alg.dim();
  Matrix m(n * keys.size(), images.size());
  for (std::size_t col = 0; col < images.size(); ++col)
    for (std::size_t t = 0; t < keys.size(); ++t) {
      const AlgElement c = images[col].coeff(alg, keys[t]);
      for (std::size_t r = 0; r < n; ++r) m(t * n + r, col) = c.coeffs[r];
    }
  return m;
}

std::vector<HKey> union_keys(const std::vector<CoringElement>& xs) {
  std::set<HKey> keys;
  for (const auto& x : xs)
    for (const auto& [k, c] : x.terms()) keys.insert(k);
  return {keys.begin(), keys.end()};
}

}  // namespace

CoinvariantAlgebra coinvariants(const Coaction& co) {
  const FinAlgebra& a = co.algebra();
  std::vector<CoringElement> images;
  for (std::size_t i = 0; i < a.dim(); ++i)
    images.push_back(sub(a, co.rho_basis(i), left_multiply(a, a.basis(i), coring_one(a, co.hopf()))));
  const std::vector<HKey> keys = union_keys(images);
  std::vector<Vector> kernel;
  if (keys.empty()) {
    for (std::size_t i = 0; i < a.dim(); ++i) kernel.push_back(a.basis(i).coeffs);
  } else {
    kernel = kernel_basis(a.field(), coring_map_matrix(a, keys, images));
  }
  std::vector<AlgElement> basis;
  for (auto& v : kernel) basis.push_back(AlgElement{std::move(v)});
  Subalgebra sub = make_subalgebra(a, basis);
  Matrix inclusion(a.dim(), sub.basis.size());
  for (std::size_t c = 0; c < sub.basis.size(); ++c)
    for (std::size_t r = 0; r < a.dim(); ++r) inclusion(r, c) = sub.basis[c].coeffs[r];
  return CoinvariantAlgebra{std::move(sub), std::move(inclusion)};
}

bool is_coinvariant(const Coaction& co, const AlgElement& a) {
  return co.rho(a) == left_multiply(co.algebra(), a, coring_one(co.algebra(), co.hopf()));
}

GaloisReport galois_canonical_map(const Coaction& co) {
  const FinAlgebra& a = co.algebra();
  const HopfDesc& h = co.hopf();
  const CoinvariantAlgebra b = coinvariants(co);
  const TensorSquare t = tensor_over_subalgebra(a, b.subalgebra);

  GaloisReport report;
  report.infinite_codomain = !h.is_finite();
  report.target_keys = h.is_finite() ? h.keys() : co.occurring_keys();
  std::vector<CoringElement> images;
  for (const auto& [i, j] : t.basis_pairs) images.push_back(left_multiply(a, a.basis(i), co.rho_basis(j)));
  report.matrix = coring_map_matrix(a, report.target_keys, images);
  report.domain_dim = t.basis_pairs.size();
  report.codomain_dim = a.dim() * report.target_keys.size();
  report.rank = rank(a.field(), report.matrix);
  report.injective = report.rank == report.domain_dim;
  report.surjective = report.rank == report.codomain_dim;
  return report;
}

}  // namespace coringlab
