#include "coringlab/group.hpp"

#include "coringlab/error.hpp"

namespace coringlab {

GroupSpec GroupSpec::integers() { return GroupSpec(); }

GroupSpec GroupSpec::unchecked(std::vector<std::vector<GroupElem>> table, std::vector<std::string> names) {
  GroupSpec g;
  g.kind_ = GroupKind::Finite;
  g.table_ = std::move(table);
  g.names_ = std::move(names);
  const auto m = static_cast<GroupElem>(g.table_.size());
  g.identity_ = -1;
  for (GroupElem e = 0; e < m && g.identity_ < 0; ++e) {
    bool ok = g.table_[e].size() == g.table_.size();
    for (GroupElem x = 0; ok && x < m; ++x)
      ok = g.table_[e][x] == x && g.table_[x].size() == g.table_.size() && g.table_[x][e] == x;
    if (ok) g.identity_ = e;
  }
  g.inverse_.assign(g.table_.size(), -1);
  if (g.identity_ >= 0)
    for (GroupElem a = 0; a < m; ++a)
      for (GroupElem b = 0; b < m; ++b)
        if (g.table_[a].size() == g.table_.size() && g.table_[a][b] == g.identity_) {
          g.inverse_[a] = b;
          break;
        }
  return g;
}

GroupSpec GroupSpec::finite(std::vector<std::vector<GroupElem>> table, std::vector<std::string> names) {
  GroupSpec g = unchecked(std::move(table), std::move(names));
  auto problems = validate_group(g);
  if (!problems.empty()) throw ValidationError("invalid group table: " + problems.front());
  return g;
}

GroupSpec GroupSpec::cyclic(unsigned n) {
  if (n == 0) throw ValidationError("cyclic group of order 0");
  std::vector<std::vector<GroupElem>> table(n, std::vector<GroupElem>(n));
  std::vector<std::string> names;
  for (unsigned a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : (a == 1 ? "s" : "s^" + std::to_string(a)));
    for (unsigned b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return finite(std::move(table), std::move(names));
}

GroupElem GroupSpec::op(GroupElem a, GroupElem b) const {
  if (kind_ == GroupKind::Integers) return a + b;
  return table_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
}

GroupElem GroupSpec::inverse(GroupElem a) const {
  if (kind_ == GroupKind::Integers) return -a;
  return inverse_.at(static_cast<std::size_t>(a));
}

GroupElem GroupSpec::power(GroupElem a, std::int64_t k) const {
  if (kind_ == GroupKind::Integers) return a * k;
  GroupElem base = k < 0 ? inverse(a) : a;
  GroupElem r = identity_;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) r = op(r, base);
  return r;
}

bool GroupSpec::is_abelian() const {
  if (kind_ == GroupKind::Integers) return true;
  for (std::size_t a = 0; a < table_.size(); ++a)
    for (std::size_t b = a + 1; b < table_.size(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::string GroupSpec::name(GroupElem a) const {
  if (kind_ == GroupKind::Integers) return std::to_string(a);
  if (static_cast<std::size_t>(a) < names_.size()) return names_[static_cast<std::size_t>(a)];
  return "g" + std::to_string(a);
}

std::vector<std::string> validate_group(const GroupSpec& g) {
  std::vector<std::string> out;
  if (!g.is_finite()) return out;
  const auto& t = g.table();
  const auto m = static_cast<GroupElem>(t.size());
  if (m == 0) return {"empty table"};
  for (GroupElem a = 0; a < m; ++a) {
    if (static_cast<GroupElem>(t[a].size()) != m) return {"row " + std::to_string(a) + " has wrong length"};
    for (GroupElem b = 0; b < m; ++b)
      if (t[a][b] < 0 || t[a][b] >= m)
        return {"entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range"};
  }
  if (g.identity() < 0) return {"no identity element"};
  for (GroupElem a = 0; a < m; ++a)
    if (g.inverse(a) < 0 || t[g.inverse(a)][a] != g.identity()) {
      out.push_back("element " + std::to_string(a) + " has no two-sided inverse");
      break;
    }
  for (GroupElem a = 0; a < m; ++a)
    for (GroupElem b = 0; b < m; ++b)
      for (GroupElem c = 0; c < m; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) {
          out.push_back("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ")");
          return out;
        }
  return out;
}

}  // namespace coringlab
