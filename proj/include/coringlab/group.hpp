#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coringlab {

// Index of a group element (finite groups) or the integer itself (Z).
using GroupElem = std::int64_t;

enum class GroupKind { Integers, Finite };

// Either the infinite cyclic group Z (written additively) or a finite group
// given by its Cayley table.
class GroupSpec {
 public:
  static GroupSpec integers();
  // Throws ValidationError if the table is not a group law.
  static GroupSpec finite(std::vector<std::vector<GroupElem>> table, std::vector<std::string> names = {});
  // Z/n with elements 0..n-1, generator 1.
  static GroupSpec cyclic(unsigned n);
  // Builds without validation; use validate_group to inspect.
  static GroupSpec unchecked(std::vector<std::vector<GroupElem>> table, std::vector<std::string> names = {});

  GroupKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == GroupKind::Finite; }
  // 0 for Z.
  std::size_t order() const { return table_.size(); }
  GroupElem identity() const { return identity_; }
  GroupElem op(GroupElem a, GroupElem b) const;
  GroupElem inverse(GroupElem a) const;
  GroupElem power(GroupElem a, std::int64_t k) const;
  bool is_abelian() const;
  const std::vector<std::vector<GroupElem>>& table() const { return table_; }
  std::string name(GroupElem a) const;

 private:
  GroupKind kind_ = GroupKind::Integers;
  std::vector<std::vector<GroupElem>> table_;
  std::vector<GroupElem> inverse_;
  std::vector<std::string> names_;
  GroupElem identity_ = 0;
};

// Empty when the table is a group law; otherwise one message per failed law.
std::vector<std::string> validate_group(const GroupSpec& g);

}  // namespace coringlab
