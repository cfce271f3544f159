#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "coringlab/error.hpp"
#include "coringlab/smith.hpp"

namespace coringlab {

// Finitely generated abelian group Z^g / (row span of the relation matrix).
struct AbGroupPresentation {
  std::vector<std::string> generators;
  IntMatrix relations;
  // Invariant factors d_1 | d_2 | ... with every d > 1, followed by one 0 per
  // free summand.
  std::vector<BigInt> invariant_factors;

  bool is_trivial() const { return invariant_factors.empty(); }
  std::size_t free_rank() const;
  // Empty when the group is infinite.
  std::optional<BigInt> order() const;
  // "1", "Z/2", "Z/2 x Z", ...
  std::string str() const;
};

AbGroupPresentation present_cokernel(std::vector<std::string> generators, const RelationLattice& relations);

// A quotient G / S of a group listed element by element, with one coset
// class per element and the least element of each class as representative.
struct Quotient {
  AbGroupPresentation group;
  std::vector<std::size_t> class_of;         // per listed element
  std::vector<std::size_t> representatives;  // element index of each class, increasing
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// `elements` must be sorted and duplicate free; `mul` is the group law.
// When `complete` the list is a whole finite group and relations are taken
// along a greedy generating set; otherwise it is a window into a larger group
// and every product that stays inside the list is a relation.
template <typename T, typename Mul>
Quotient quotient_by_subgroup(const std::vector<T>& elements, Mul mul, const T& identity,
                              const std::vector<T>& subgroup, bool complete, std::vector<std::string> labels) {
  const std::size_t g = elements.size();
  std::map<T, std::size_t> index;
  for (std::size_t i = 0; i < g; ++i) index.emplace(elements[i], i);
  auto find = [&](const T& x) -> std::optional<std::size_t> {
    auto it = index.find(x);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };

  RelationLattice lattice(g);
  auto relate = [&](std::size_t a, std::size_t b, std::size_t ab) {
    std::vector<BigInt> row(g);
    row[a] += 1;
    row[b] += 1;
    row[ab] -= 1;
    lattice.add(std::move(row));
  };

  if (complete) {
    if (!find(identity)) throw DomainError("group listing does not contain the identity");
    std::vector<std::size_t> gens;
    std::vector<bool> reached(g, false);
    reached[*find(identity)] = true;
    for (std::size_t i = 0; i < g; ++i) {
      if (reached[i]) continue;
      gens.push_back(i);
      // Close up under multiplication by the generators chosen so far.
      std::vector<std::size_t> frontier;
      for (std::size_t j = 0; j < g; ++j)
        if (reached[j]) frontier.push_back(j);
      while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t x : frontier)
          for (std::size_t s : gens) {
            auto y = find(mul(elements[x], elements[s]));
            if (!y) throw DomainError("group listing is not closed under multiplication");
            if (!reached[*y]) {
              reached[*y] = true;
              next.push_back(*y);
            }
          }
        frontier = std::move(next);
      }
    }
    for (std::size_t x = 0; x < g; ++x)
      for (std::size_t s : gens) relate(x, s, *find(mul(elements[x], elements[s])));
    if (auto e = find(identity)) {
      std::vector<BigInt> row(g);
      row[*e] = 1;
      lattice.add(std::move(row));
    }
  } else {
    for (std::size_t a = 0; a < g; ++a)
      for (std::size_t b = a; b < g; ++b)
        if (auto ab = find(mul(elements[a], elements[b]))) relate(a, b, *ab);
  }

  detail::DisjointSets classes(g);
  for (const auto& s : subgroup) {
    if (auto i = find(s)) {
      std::vector<BigInt> row(g);
      row[*i] = 1;
      lattice.add(std::move(row));
    }
  }
  for (std::size_t x = 0; x < g; ++x)
    for (const auto& s : subgroup)
      if (auto y = find(mul(elements[x], s))) classes.unite(x, *y);

  Quotient out;
  out.group = present_cokernel(std::move(labels), lattice);
  std::map<std::size_t, std::size_t> class_id;
  out.class_of.resize(g);
  for (std::size_t x = 0; x < g; ++x) {
    const std::size_t root = classes.find(x);
    auto [it, inserted] = class_id.try_emplace(root, out.representatives.size());
    if (inserted) out.representatives.push_back(x);
    out.class_of[x] = it->second;
  }
  return out;
}

}  // namespace coringlab
