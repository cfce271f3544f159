#include "coringlab/report.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "coringlab/cohomology.hpp"
#include "coringlab/error.hpp"
#include "json.hpp"

namespace coringlab {

using nlohmann::json;

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"check",     "grouplikes", "h1",    "group-h1", "hilbert90",
                                                 "exact-report", "e-test", "twist", "iso",      "idempotent-grouplikes"};
  return names;
}

DegreeWindow parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ValidationError("window must look like A..B, got \"" + text + "\"");
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    DegreeWindow w{std::stoll(lo, &used), 0};
    if (used != lo.size()) throw std::invalid_argument(lo);
    w.hi = std::stoll(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
    if (w.lo > w.hi) throw ValidationError("window " + text + " is empty");
    return w;
  } catch (const std::logic_error&) {
    throw ValidationError("window must look like A..B, got \"" + text + "\"");
  }
}

namespace {

// Shared state of one command run.
struct Run {
  Run(const Instance& i, const RunOptions& o) : inst(i), ctx(i.ctx), bounds(i.bounds), opts(o) {}

  const Instance& inst;
  const CoringCtx& ctx;
  EnumerationBounds bounds;
  const RunOptions& opts;
  json result = json::object();
  std::vector<std::string> text;
  int exit_code = 0;

  const FinAlgebra& alg() const { return ctx.algebra(); }
  const HopfDesc& hopf() const { return ctx.hopf(); }
  std::string fmt(const AlgElement& a) const { return alg().format(a); }
  std::string fmt(const CoringElement& x) const { return format(alg(), hopf(), x); }
  void violation() { exit_code = 1; }
  void line(const std::string& s) { text.push_back(s); }

  bool finite() const { return hopf().is_finite(); }
  // Exhaustiveness statement attached to enumeration-backed verdicts.
  json scope() const {
    json s = json::object();
    s["complete"] = finite();
    if (!finite()) s["window"] = bounds.window.str();
    s["element_cap"] = bounds.element_cap;
    s["search_cap"] = bounds.search_cap;
    return s;
  }
};

json strings(const std::vector<std::string>& v) { return json(v); }

json joint_json(const JointCheck& j) {
  return json{{"pass", j.pass}, {"checked", j.checked}, {"failures", strings(j.failures)}};
}

json group_json(const AbGroupPresentation& g) {
  json inv = json::array();
  for (const auto& d : g.invariant_factors) inv.push_back(d.get_str());
  return json{{"structure", g.str()},
              {"invariant_factors", inv},
              {"generators", g.generators.size()},
              {"relation_rows", g.relations.rows()}};
}

AlgElement parse_alg_element(const Run& r, const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != r.alg().dim())
    throw ValidationError(what + ": expected " + std::to_string(r.alg().dim()) + " coordinates");
  AlgElement a = r.alg().zero();
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_number_integer())
      a.coeffs[i] = r.ctx.field().from_int(j[i].get<long>());
    else if (j[i].is_string())
      a.coeffs[i] = r.ctx.field().parse(j[i].get<std::string>());
    else
      throw ValidationError(what + ": coordinate " + std::to_string(i) + " is not a scalar");
  }
  return a;
}

json parse_option_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    throw ValidationError(what + ": malformed JSON");
  }
}

HKey parse_hkey(const Run& r, const json& j, const std::string& what) {
  const GroupSpec& g = r.hopf().group;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    for (std::size_t i = 0; i < g.order(); ++i)
      if (g.name(static_cast<HKey>(i)) == s || r.hopf().key_name(static_cast<HKey>(i)) == s) return static_cast<HKey>(i);
    throw ValidationError(what + ": unknown key \"" + s + "\"");
  }
  if (!j.is_number_integer()) throw ValidationError(what + ": keys are integers or names");
  const HKey k = j.get<HKey>();
  if (g.is_finite() && (k < 0 || static_cast<std::size_t>(k) >= g.order()))
    throw ValidationError(what + ": key " + std::to_string(k) + " out of range");
  return k;
}

CoringElement parse_coring_element(const Run& r, const std::string& text, const std::string& what) {
  const json j = parse_option_json(text, what);
  if (j.is_object() && j.contains("d")) return coboundary_d(r.ctx, parse_alg_element(r, j["d"], what)).element;
  if (!j.is_array()) throw ValidationError(what + ": expected a list of [key, coordinates] pairs");
  CoringElement x;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw ValidationError(what + ": expected [key, coordinates]");
    x.add_term(r.alg(), parse_hkey(r, term[0], what), parse_alg_element(r, term[1], what));
  }
  return x;
}

// A grouplike given on the command line, with its inverse when one exists
// within the symmetric window.
Grouplike require_grouplike(const Run& r, const CoringElement& x, const std::string& what) {
  if (auto c = is_grouplike(r.ctx, x); !c) throw ValidationError(what + " is not grouplike: " + c.witness);
  InverseResult inv = try_invert_coring(r.ctx, x, r.bounds.window.symmetric());
  return Grouplike{x, inv.status, inv.inverse};
}

SearchOptions search_options(const Run& r) {
  SearchOptions s;
  s.cap = r.bounds.element_cap;
  if (r.opts.witness) s.witness = parse_alg_element(r, parse_option_json(*r.opts.witness, "--witness"), "--witness");
  return s;
}

json galois_json(const GaloisReport& g, const Run& r) {
  json keys = json::array();
  for (HKey k : g.target_keys) keys.push_back(r.hopf().key_name(k));
  return json{{"domain_dim", g.domain_dim},     {"codomain_dim", g.codomain_dim},
              {"rank", g.rank},                 {"injective", g.injective},
              {"surjective", g.surjective},     {"bijective", g.bijective()},
              {"infinite_codomain", g.infinite_codomain}, {"galois", g.galois()},
              {"target_keys", keys}};
}

json h1_json(const HarrisonH1& h, const Run& r) {
  json cosets = json::array();
  std::vector<std::vector<std::string>> members(h.quotient.representatives.size());
  for (std::size_t i = 0; i < h.invertible.size(); ++i) members[h.quotient.class_of[i]].push_back(r.fmt(h.invertible[i]));
  for (std::size_t c = 0; c < members.size(); ++c)
    cosets.push_back(json{{"representative", r.fmt(h.invertible[h.quotient.representatives[c]])}, {"members", members[c]}});
  json image = json::array();
  for (const auto& x : h.coboundaries.image) image.push_back(r.fmt(x));
  json out{{"group", group_json(h.quotient.group)},
           {"grouplikes", h.grouplikes.size()},
           {"invertible", h.invertible.size()},
           {"units", h.coboundaries.units.size()},
           {"image_d", image},
           {"cosets", cosets},
           {"scope", r.scope()}};
  if (h.window_relative) {
    out["window_relative"] = true;
    out["window"] = h.window.str();
    out["image_outside_window"] = h.image_outside_window;
  }
  return out;
}

void cmd_check(Run& r) {
  const auto alg_rep = validate_algebra(r.alg());
  const auto hopf_rep = validate_bialgebra(r.hopf());
  const auto co_rep = validate_comodule_algebra(r.ctx.coaction);
  auto rep_json = [](const ValidationReport& v) {
    json f = json::array();
    for (const auto& x : v.violations) f.push_back(x.law + ": " + x.witness);
    return json{{"pass", v.ok()}, {"failures", f}};
  };
  r.result["algebra"] = rep_json(alg_rep);
  r.result["bialgebra"] = rep_json(hopf_rep);
  r.result["comodule_algebra"] = rep_json(co_rep);
  if (!alg_rep.ok() || !hopf_rep.ok() || !co_rep.ok()) r.violation();

  const CoinvariantAlgebra b = coinvariants(r.ctx.coaction);
  json bb = json::array();
  for (const auto& x : b.subalgebra.basis) bb.push_back(r.fmt(x));
  r.result["coinvariants"] = bb;
  const GaloisReport g = galois_canonical_map(r.ctx.coaction);
  r.result["galois"] = galois_json(g, r);
  r.line("axioms: " + std::string(r.exit_code == 0 ? "pass" : "FAIL"));
  r.line("coinvariants: dim " + std::to_string(b.subalgebra.basis.size()));
  r.line("canonical map: " + std::string(g.bijective() ? "bijective" : "not bijective") +
         (g.infinite_codomain ? " onto occurring degrees" : "") + ", galois " + (g.galois() ? "yes" : "no"));

  if (!r.ctx.field().is_prime_field()) {
    r.result["coboundaries"] = "skipped: units are not enumerable over Q";
    return;
  }
  // d(a) is grouplike and invertible with the explicit inverse, for every unit.
  JointCheck sound;
  const CoringElement one = coring_one(r.alg(), r.hopf());
  for (const auto& a : enumerate_units(r.alg(), r.bounds.element_cap)) {
    ++sound.checked;
    const Grouplike d = coboundary_d(r.ctx, a);
    auto gl = is_grouplike(r.ctx, d.element);
    if (!gl || coring_mul(r.ctx, d.element, *d.inverse) != one) {
      sound.pass = false;
      sound.failures.push_back("d(" + r.fmt(a) + ") " + (gl ? "has a wrong inverse" : gl.witness));
    }
  }
  r.result["coboundaries"] = joint_json(sound);
  if (!sound.pass) r.violation();
  r.line("coboundaries of " + std::to_string(sound.checked) + " units: " + (sound.pass ? "pass" : "FAIL"));
}

void cmd_grouplikes(Run& r) {
  const auto all = enumerate_grouplikes(r.ctx, r.bounds);
  json items = json::array();
  std::size_t invertible = 0;
  for (const auto& g : all) {
    json item{{"element", r.fmt(g.element)}, {"invertible", to_string(g.invertible)}};
    if (g.inverse) item["inverse"] = r.fmt(*g.inverse);
    auto check = is_grouplike(r.ctx, g.element);
    item["verified"] = check.grouplike;
    if (!check) r.violation();
    if (r.ctx.coaction.kind() == CoactionKind::Grading) {
      if (auto m = idempotent_degrees_of_grouplike(r.ctx, g.element)) {
        json parts = json::array();
        for (const auto& [e, d] : m->parts) parts.push_back(json{r.fmt(e), r.hopf().key_name(d)});
        item["idempotent_degrees"] = parts;
      } else {
        item["idempotent_degrees"] = nullptr;
      }
    }
    if (g.invertible == Invertibility::Yes) ++invertible;
    items.push_back(item);
  }
  r.result["solver"] = r.ctx.coaction.kind() == CoactionKind::Grading ? "homogeneous components" : "cocycle equations";
  r.result["scope"] = r.scope();
  r.result["count"] = all.size();
  r.result["invertible_count"] = invertible;
  r.result["items"] = items;
  r.line("grouplikes: " + std::to_string(all.size()) + " (" + std::to_string(invertible) + " invertible)" +
         (r.finite() ? "" : " in window " + r.bounds.window.str()));
  for (const auto& g : all) r.line("  " + r.fmt(g.element) + "  [" + to_string(g.invertible) + "]");
}

void cmd_h1(Run& r) {
  const HarrisonH1 h = harrison_h1(r.ctx, r.bounds);
  r.result = h1_json(h, r);
  r.line("H^1 = " + h.quotient.group.str() + (h.window_relative ? " (relative to window " + h.window.str() + ")" : ""));
  r.line("|G^i| = " + std::to_string(h.invertible.size()) + ", |Im d| = " + std::to_string(h.coboundaries.image.size()));
  for (std::size_t c : h.quotient.representatives) r.line("  coset of " + r.fmt(h.invertible[c]));
}

void cmd_group_h1(Run& r) {
  const GroupH1 g = group_h1(r.ctx, r.bounds);
  std::vector<std::vector<std::string>> members(g.quotient.representatives.size());
  for (std::size_t i = 0; i < g.cocycles.size(); ++i)
    members[g.quotient.class_of[i]].push_back(g.quotient.group.generators[i]);
  json cosets = json::array();
  for (std::size_t c = 0; c < members.size(); ++c)
    cosets.push_back(json{{"representative", g.quotient.group.generators[g.quotient.representatives[c]]},
                          {"members", members[c]}});
  const HarrisonH1 h = harrison_h1(r.ctx, r.bounds);
  const std::string mismatch = h1_bridge_mismatch(r.ctx, h, g);
  r.result = json{{"group", group_json(g.quotient.group)},
                  {"cocycles", g.cocycles.size()},
                  {"coboundaries", g.coboundaries.size()},
                  {"cosets", cosets},
                  {"agrees_with_harrison", json{{"pass", mismatch.empty()}, {"mismatch", mismatch}}},
                  {"scope", r.scope()}};
  if (!mismatch.empty()) r.violation();
  r.line("H^1(G, units) = " + g.quotient.group.str() + " from " + std::to_string(g.cocycles.size()) + " cocycles and " +
         std::to_string(g.coboundaries.size()) + " coboundaries");
  r.line("matches Harrison H^1: " + std::string(mismatch.empty() ? "yes" : "NO (" + mismatch + ")"));
}

void cmd_hilbert90(Run& r) {
  const Hilbert90Report rep = hilbert90_report(r.ctx, r.bounds);
  r.result = json{{"galois", galois_json(rep.galois, r)},
                  {"h1", h1_json(rep.h1, r)},
                  {"expectation_applies", rep.expectation_applies},
                  {"holds", rep.holds}};
  if (!rep.holds) r.violation();
  r.line("galois: " + std::string(rep.galois.galois() ? "yes" : "no"));
  r.line("H^1 = " + rep.h1.quotient.group.str() +
         (rep.expectation_applies ? (rep.holds ? " (trivial as expected)" : " (EXPECTED TRIVIAL)") : " (no expectation)"));
}

void cmd_exact_report(Run& r) {
  const ExactSequenceReport rep = exact_sequence_report(r.ctx, r.bounds);
  const HarrisonH1& h = rep.h1;
  json units_b = json::array();
  for (const auto& a : rep.units_b) units_b.push_back(r.fmt(a));
  std::size_t e_count = 0;
  for (bool b : rep.in_e) e_count += b ? 1 : 0;
  r.result = json{{"cardinalities",
                   json{{"units_B", rep.units_b.size()},
                        {"units_A", h.coboundaries.units.size()},
                        {"grouplikes", h.grouplikes.size()},
                        {"invertible_grouplikes", h.invertible.size()},
                        {"image_d", h.coboundaries.image.size()},
                        {"E", e_count}}},
                  {"units_B", units_b},
                  {"joints",
                   json{{"ker_d_is_units_B", joint_json(rep.at_units)},
                        {"image_d_is_trivial_twists", joint_json(rep.at_grouplikes)},
                        {"image_d_in_E", joint_json(rep.image_in_e)},
                        {"E_subgroup", joint_json(rep.e_subgroup)}}},
                  {"h1", h1_json(h, r)},
                  {"pass", rep.pass()}};
  if (!rep.pass()) r.violation();
  r.line("|G_m(B)| = " + std::to_string(rep.units_b.size()) + ", |G_m(A)| = " + std::to_string(h.coboundaries.units.size()) +
         ", |G^i| = " + std::to_string(h.invertible.size()) + ", |Im d| = " + std::to_string(h.coboundaries.image.size()) +
         ", |E| = " + std::to_string(e_count));
  auto verdict = [&](const char* name, const JointCheck& j) {
    r.line(std::string(name) + ": " + (j.pass ? "pass" : "FAIL") + " (" + std::to_string(j.checked) + " checked)");
  };
  verdict("ker d = G_m(B)", rep.at_units);
  verdict("Im d = trivial twists", rep.at_grouplikes);
  verdict("Im d in E", rep.image_in_e);
  verdict("E closed", rep.e_subgroup);
  r.line("H^1 = " + h.quotient.group.str() + (h.window_relative ? " (relative to window " + h.window.str() + ")" : ""));
}

void cmd_e_test(Run& r) {
  std::vector<Grouplike> targets;
  if (r.opts.element) {
    targets.push_back(require_grouplike(r, parse_coring_element(r, *r.opts.element, "--element"), "--element"));
    if (targets.back().invertible != Invertibility::Yes)
      throw ValidationError("--element has no inverse within window " + r.bounds.window.symmetric().str());
  } else {
    for (auto& g : enumerate_grouplikes(r.ctx, r.bounds))
      if (g.invertible == Invertibility::Yes) targets.push_back(std::move(g));
    r.result["scope"] = r.scope();
  }
  json items = json::array();
  std::size_t members = 0;
  for (const auto& g : targets) {
    const EMembership m = e_membership(r.ctx, g);
    members += m.member ? 1 : 0;
    items.push_back(json{{"element", r.fmt(g.element)},
                         {"member", m.member},
                         {"rank_A_AX", m.rank},
                         {"rank_A_AXinv", m.inverse_rank},
                         {"dim_A", r.alg().dim()}});
    r.line(r.fmt(g.element) + ": " + (m.member ? "in E" : "not in E") + " (ranks " + std::to_string(m.rank) + ", " +
           std::to_string(m.inverse_rank) + " of " + std::to_string(r.alg().dim()) + ")");
  }
  r.result["items"] = items;
  r.result["members"] = members;
}

void cmd_twist(Run& r) {
  const CoringElement x =
      r.opts.element ? parse_coring_element(r, *r.opts.element, "--element") : coring_one(r.alg(), r.hopf());
  const Grouplike g = require_grouplike(r, x, "--element");
  const SearchOptions so = search_options(r);
  const TwistCoinvariants t = twist_coinvariants(r.ctx, x, so);
  json basis = json::array();
  for (const auto& a : t.basis) basis.push_back(r.fmt(a));
  r.result = json{{"element", r.fmt(x)},
                  {"basis", basis},
                  {"has_unit", to_string(t.has_unit)},
                  {"searched", t.searched},
                  {"generates", t.generates}};
  if (t.unit_witness) r.result["unit_witness"] = r.fmt(*t.unit_witness);
  if (t.has_unit == Verdict::No)
    r.result["exhaustive"] = r.ctx.field().is_prime_field() ? "all elements of A_X searched" : "A_X is zero";
  r.line("A_X for X = " + r.fmt(x) + ": dim " + std::to_string(t.basis.size()) + ", unit " + to_string(t.has_unit) +
         (t.unit_witness ? " (" + r.fmt(*t.unit_witness) + ")" : "") + ", A A_X = A: " + (t.generates ? "yes" : "no"));
  if (g.inverse) {
    // Coinvariants of the twisted coaction against A_{X^{-1}}.
    const auto lhs = twisted_module_coinvariants(r.ctx, x);
    const auto rhs = twist_coinvariants(r.ctx, *g.inverse, SearchOptions{r.bounds.element_cap, std::nullopt}).basis;
    std::vector<Vector> l, rr, both;
    for (const auto& a : lhs) l.push_back(a.coeffs);
    for (const auto& a : rhs) rr.push_back(a.coeffs);
    both = l;
    both.insert(both.end(), rr.begin(), rr.end());
    const std::size_t n = r.alg().dim();
    const bool same = span_rank(r.ctx.field(), l, n) == span_rank(r.ctx.field(), both, n) &&
                      span_rank(r.ctx.field(), rr, n) == span_rank(r.ctx.field(), both, n);
    r.result["twisted_coinvariants_match_inverse"] = same;
    if (!same) r.violation();
    r.line("twisted coinvariants = A_{X^-1}: " + std::string(same ? "yes" : "NO"));
  }
}

void cmd_iso(Run& r) {
  if (!r.opts.element) throw ValidationError("iso needs --element (and optionally --other, default 1(x)1)");
  const CoringElement x = parse_coring_element(r, *r.opts.element, "--element");
  const CoringElement y =
      r.opts.other ? parse_coring_element(r, *r.opts.other, "--other") : coring_one(r.alg(), r.hopf());
  require_grouplike(r, x, "--element");
  require_grouplike(r, y, "--other");
  const IsoWitness w = twisted_iso_witness(r.ctx, x, y, search_options(r));
  r.result = json{{"element", r.fmt(x)},
                  {"other", r.fmt(y)},
                  {"status", to_string(w.status)},
                  {"solution_dim", w.solution_dim},
                  {"searched", w.searched}};
  if (w.unit) r.result["witness"] = r.fmt(*w.unit);
  if (w.status == Verdict::No)
    r.result["exhaustive"] = r.ctx.field().is_prime_field() ? "every solution of Y b = b X searched" : "only b = 0 solves Y b = b X";
  r.line("Y b = b X with b a unit: " + to_string(w.status) + (w.unit ? " (b = " + r.fmt(*w.unit) + ")" : ""));
}

void cmd_idempotent_grouplikes(Run& r) {
  const auto maps = enumerate_idempotent_degree_maps(r.ctx, r.bounds);
  const auto all = enumerate_grouplikes(r.ctx, r.bounds);
  const bool reduced = is_reduced(r.alg(), r.bounds.element_cap);
  std::set<CoringElement> from_maps;
  json items = json::array();
  for (const auto& m : maps) {
    const Grouplike g = grouplike_from_idempotent_degrees(r.ctx, m);
    json parts = json::array();
    for (const auto& [e, d] : m.parts) parts.push_back(json{r.fmt(e), r.hopf().key_name(d)});
    const bool ok = static_cast<bool>(is_grouplike(r.ctx, g.element));
    if (!ok) r.violation();
    items.push_back(json{{"parts", parts}, {"grouplike", r.fmt(g.element)}, {"verified", ok}});
    from_maps.insert(g.element);
  }
  json others = json::array();
  for (const auto& g : all)
    if (!from_maps.count(g.element)) others.push_back(r.fmt(g.element));
  const bool bijective = others.empty() && from_maps.size() == all.size();
  r.result = json{{"maps", items},
                  {"count", maps.size()},
                  {"grouplikes", all.size()},
                  {"reduced", reduced},
                  {"not_from_idempotents", others},
                  {"bijective", bijective},
                  {"scope", r.scope()}};
  if (reduced && !bijective) r.violation();
  r.line(std::to_string(maps.size()) + " idempotent-degree maps, " + std::to_string(all.size()) + " grouplikes, " +
         (reduced ? "reduced" : "not reduced") + ", bijective: " + (bijective ? "yes" : "no"));
  for (const auto& o : others) r.line("  not from idempotents: " + o.get<std::string>());
}

const std::map<std::string, std::function<void(Run&)>>& dispatch() {
  static const std::map<std::string, std::function<void(Run&)>> table = {
      {"check", cmd_check},         {"grouplikes", cmd_grouplikes}, {"h1", cmd_h1},
      {"group-h1", cmd_group_h1},   {"hilbert90", cmd_hilbert90},   {"exact-report", cmd_exact_report},
      {"e-test", cmd_e_test},       {"twist", cmd_twist},           {"iso", cmd_iso},
      {"idempotent-grouplikes", cmd_idempotent_grouplikes}};
  return table;
}

std::string describe_hopf(const HopfDesc& h) {
  const std::string g = h.group.is_finite() ? "group of order " + std::to_string(h.group.order()) : "Z";
  return (h.variant == HopfVariant::GroupBasis ? "group algebra of " : "dual of ") + g;
}

}  // namespace

Report run_command(const Instance& inst, const std::string& command, const RunOptions& opts) {
  auto it = dispatch().find(command);
  if (it == dispatch().end()) throw ValidationError("unknown command \"" + command + "\"");
  Run r(inst, opts);
  if (opts.window) r.bounds.window = *opts.window;
  if (opts.cap) r.bounds.element_cap = *opts.cap;

  const auto start = std::chrono::steady_clock::now();
  it->second(r);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json doc = json::object();
  doc["command"] = command;
  doc["instance"] = json{{"origin", inst.origin}, {"hash", inst.hash}, {"name", inst.name}};
  doc["context"] = json{{"field", r.ctx.field().name()},
                        {"algebra_basis", r.alg().basis_names()},
                        {"hopf", describe_hopf(r.hopf())},
                        {"coaction", r.ctx.coaction.kind() == CoactionKind::Grading ? "grading" : "action"}};
  doc["bounds"] = json{{"window", r.bounds.window.str()}, {"element_cap", r.bounds.element_cap}};
  doc["result"] = r.result;
  doc["exit_code"] = r.exit_code;
  if (opts.timing) doc["timing"] = json{{"milliseconds", static_cast<long long>(ms)}};

  Report out;
  out.json = doc.dump(2) + "\n";
  std::ostringstream text;
  text << command << " " << inst.origin << (inst.name.empty() ? "" : " (" + inst.name + ")") << "\n";
  for (const auto& l : r.text) text << l << "\n";
  out.text = text.str();
  out.exit_code = r.exit_code;
  return out;
}

}  // namespace coringlab
