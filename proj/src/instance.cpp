#include "coringlab/instance.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "coringlab/error.hpp"
#include "json.hpp"

namespace coringlab {

using nlohmann::json;

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// A JSON value together with its path, for located diagnostics.
class Node {
 public:
  Node(const json& value, std::string path, const std::string& origin) : v_(value), path_(std::move(path)), origin_(origin) {}

  const json& value() const { return v_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError(origin_ + ": " + path_ + ": " + what);
  }

  bool has(const std::string& key) const { return v_.is_object() && v_.contains(key); }
  Node at(const std::string& key) const {
    if (!v_.is_object()) fail("expected an object");
    if (!v_.contains(key)) fail("missing field \"" + key + "\"");
    return Node(v_.at(key), path_ + "." + key, origin_);
  }
  Node at(std::size_t i) const { return Node(v_.at(i), path_ + "[" + std::to_string(i) + "]", origin_); }

  std::size_t size() const {
    if (!v_.is_array()) fail("expected an array");
    return v_.size();
  }
  std::string str() const {
    if (!v_.is_string()) fail("expected a string");
    return v_.get<std::string>();
  }
  long integer() const {
    if (!v_.is_number_integer()) fail("expected an integer");
    return v_.get<long>();
  }
  Scalar scalar(const Field& field) const {
    try {
      if (v_.is_number_integer()) return field.from_int(v_.get<long>());
      if (v_.is_string()) return field.parse(v_.get<std::string>());
    } catch (const Error& e) {
      fail(e.what());
    }
    fail("expected an integer or a rational string");
  }
  Vector vector(const Field& field, std::size_t expected) const {
    if (size() != expected) fail("expected " + std::to_string(expected) + " entries, found " + std::to_string(size()));
    Vector out;
    for (std::size_t i = 0; i < expected; ++i) out.push_back(at(i).scalar(field));
    return out;
  }

 private:
  const json& v_;
  std::string path_;
  const std::string& origin_;
};

Field parse_field(const Node& n) {
  const std::string kind = n.at("kind").str();
  if (kind == "rationals") return Field::rationals();
  if (kind == "prime") {
    const long p = n.at("p").integer();
    if (!is_prime(p)) n.at("p").fail(std::to_string(p) + " is not prime");
    return Field::prime(p);
  }
  n.at("kind").fail("unknown field kind \"" + kind + "\"");
}

unsigned positive(const Node& n) {
  const long v = n.integer();
  if (v < 1 || v > 64) n.fail("expected an integer in 1..64");
  return static_cast<unsigned>(v);
}

FinAlgebra parse_algebra(const Node& n, const Field& field) {
  if (n.has("preset")) {
    const std::string preset = n.at("preset").str();
    try {
      if (preset == "ground_field") return ground_field(field);
      if (preset == "dual_numbers") return dual_numbers(field);
      if (preset == "truncated_poly") return truncated_polynomial(field, positive(n.at("k")));
      if (preset == "product_of_fields") return product_of_fields(field, positive(n.at("n")));
      if (preset == "fp_field_ext") {
        const Node poly = n.at("poly");
        std::vector<long> coeffs;
        for (std::size_t i = 0; i < poly.size(); ++i) coeffs.push_back(poly.at(i).integer());
        const std::string var = n.has("variable") ? n.at("variable").str() : "w";
        return field_extension(field, coeffs, var);
      }
    } catch (const ValidationError& e) {
      n.fail(e.what());
    } catch (const VariantError& e) {
      n.fail(e.what());
    }
    n.at("preset").fail("unknown algebra preset \"" + preset + "\"");
  }
  const Node basis = n.at("basis");
  const std::size_t dim = basis.size();
  if (dim == 0) basis.fail("the basis is empty");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back(basis.at(i).str());
  Vector unit = n.at("unit").vector(field, dim);
  const Node mult = n.at("mult");
  if (mult.size() != dim) mult.fail("expected " + std::to_string(dim) + " rows");
  std::vector<Scalar> structure(dim * dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Node row = mult.at(i);
    if (row.size() != dim) row.fail("expected " + std::to_string(dim) + " entries");
    for (std::size_t j = 0; j < dim; ++j) {
      Vector c = row.at(j).vector(field, dim);
      for (std::size_t k = 0; k < dim; ++k) structure[(i * dim + j) * dim + k] = c[k];
    }
  }
  return FinAlgebra(field, std::move(names), std::move(structure), std::move(unit));
}

GroupSpec parse_group(const Node& n) {
  if (n.has("preset")) {
    const std::string preset = n.at("preset").str();
    if (preset == "integers") return GroupSpec::integers();
    if (preset == "cyclic_group") return GroupSpec::cyclic(positive(n.at("n")));
    n.at("preset").fail("unknown group preset \"" + preset + "\"");
  }
  const Node table = n.at("table");
  std::vector<std::vector<GroupElem>> rows;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Node row = table.at(i);
    std::vector<GroupElem> r;
    for (std::size_t j = 0; j < row.size(); ++j) r.push_back(row.at(j).integer());
    rows.push_back(std::move(r));
  }
  std::vector<std::string> names;
  if (n.has("names")) {
    const Node ns = n.at("names");
    for (std::size_t i = 0; i < ns.size(); ++i) names.push_back(ns.at(i).str());
    if (names.size() != rows.size()) ns.fail("expected one name per group element");
  }
  try {
    return GroupSpec::finite(std::move(rows), std::move(names));
  } catch (const ValidationError& e) {
    table.fail(e.what());
  }
}

// A group element given by index, Z-degree or name.
HKey parse_key(const Node& n, const GroupSpec& g) {
  if (n.value().is_string()) {
    const std::string s = n.str();
    for (std::size_t i = 0; i < g.order(); ++i)
      if (g.name(static_cast<HKey>(i)) == s) return static_cast<HKey>(i);
    n.fail("no group element named \"" + s + "\"");
  }
  const long v = n.integer();
  if (g.is_finite() && (v < 0 || static_cast<std::size_t>(v) >= g.order()))
    n.fail("group element index " + std::to_string(v) + " out of range");
  return v;
}

Matrix power(const Field& f, const Matrix& m, std::size_t k) {
  Matrix out = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) out = multiply(f, out, m);
  return out;
}

Coaction parse_coaction(const Node& n, const FinAlgebra& alg, const HopfDesc& hopf) {
  const Field& field = alg.field();
  try {
    if (n.has("degrees")) {
      if (hopf.variant != HopfVariant::GroupBasis) n.fail("degrees need a group_basis Hopf algebra");
      const Node ds = n.at("degrees");
      if (ds.size() != alg.dim()) ds.fail("expected one degree per basis vector");
      std::vector<HKey> degrees;
      for (std::size_t i = 0; i < alg.dim(); ++i) degrees.push_back(parse_key(ds.at(i), hopf.group));
      return coaction_from_grading(alg, hopf, std::move(degrees));
    }
    const Node action = n.at("action");
    if (hopf.variant != HopfVariant::DualGroup) n.fail("an action needs a dual Hopf algebra");
    const std::size_t order = hopf.group.order();
    std::vector<Matrix> ms;
    if (action.value().is_string()) {
      const std::string kind = action.str();
      if (kind == "trivial") {
        ms.assign(order, Matrix::identity(alg.dim()));
      } else if (kind == "frobenius") {
        if (!field.is_prime_field()) action.fail("the Frobenius needs a prime field");
        // Requires the cyclic labelling: element k is the k-th power of element 1.
        const Matrix f = frobenius_matrix(alg);
        for (std::size_t k = 0; k < order; ++k) {
          if (order > 1 && hopf.group.power(1, static_cast<std::int64_t>(k)) != static_cast<HKey>(k))
            action.fail("frobenius needs a cyclic group generated by element 1");
          ms.push_back(power(field, f, k));
        }
      } else {
        action.fail("unknown action \"" + kind + "\"");
      }
    } else {
      const Node list = action.at("matrices");
      if (list.size() != order) list.fail("expected one matrix per group element");
      for (std::size_t g = 0; g < order; ++g) {
        const Node m = list.at(g);
        if (m.size() != alg.dim()) m.fail("expected " + std::to_string(alg.dim()) + " rows");
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < alg.dim(); ++r) rows.push_back(m.at(r).vector(field, alg.dim()));
        ms.push_back(Matrix::from_rows(rows));
      }
    }
    return coaction_from_action(alg, hopf, std::move(ms));
  } catch (const ValidationError& e) {
    if (std::string(e.what()).find(": $.") != std::string::npos) throw;
    n.fail(e.what());
  } catch (const VariantError& e) {
    n.fail(e.what());
  }
}

}  // namespace

Instance parse_instance(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ValidationError(origin + ": line " + std::to_string(line) + ": malformed JSON");
  }
  const Node root(doc, "$", origin);
  if (!doc.is_object()) root.fail("expected an object");

  std::string name;
  if (root.has("name")) name = root.at("name").str();

  const Field field = parse_field(root.at("field"));
  const Node alg_node = root.at("algebra");
  FinAlgebra alg = parse_algebra(alg_node, field);
  if (auto rep = validate_algebra(alg); !rep.ok())
    alg_node.fail(rep.violations.front().law + " fails: " + rep.violations.front().witness);

  const Node hopf_node = root.at("hopf");
  const std::string type = hopf_node.at("type").str();
  const GroupSpec group = parse_group(hopf_node.at("group"));
  HopfDesc hopf = make_group_basis_hopf(field, GroupSpec::integers());
  try {
    if (type == "group_basis")
      hopf = make_group_basis_hopf(field, group);
    else if (type == "dual")
      hopf = make_dual_group_hopf(field, group);
    else
      hopf_node.at("type").fail("unknown Hopf type \"" + type + "\"");
  } catch (const VariantError& e) {
    hopf_node.fail(e.what());
  }
  if (auto rep = validate_bialgebra(hopf); !rep.ok())
    hopf_node.fail(rep.violations.front().law + " fails: " + rep.violations.front().witness);

  const Node co_node = root.at("coaction");
  Coaction co = parse_coaction(co_node, alg, hopf);
  if (auto rep = validate_comodule_algebra(co); !rep.ok())
    co_node.fail(rep.violations.front().law + " fails: " + rep.violations.front().witness);

  EnumerationBounds bounds;
  if (root.has("bounds")) {
    const Node b = root.at("bounds");
    if (b.has("window")) {
      const Node w = b.at("window");
      if (w.size() != 2) w.fail("expected [lo, hi]");
      bounds.window = DegreeWindow{w.at(0).integer(), w.at(1).integer()};
      if (bounds.window.lo > bounds.window.hi) w.fail("empty window");
    }
    if (b.has("cap")) {
      const long cap = b.at("cap").integer();
      if (cap < 1) b.at("cap").fail("expected a positive cap");
      bounds.element_cap = static_cast<std::uint64_t>(cap);
    }
  }
  return Instance{origin, fnv1a_hex(text), std::move(name), CoringCtx{std::move(co)}, bounds};
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path);
}

}  // namespace coringlab
