#pragma once

// Permutations act on the right: x*g = g[x], and (g*h)[x] = h[g[x]]
// (apply g first, then h).

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace dds {

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm identity(std::size_t n);
  // Cycle notation on 0-based points, e.g. {{0,1,2},{3,4}}.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator[](std::size_t x) const { return img_[x]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  Perm operator*(const Perm& h) const;
  Perm inverse() const;
  Perm pow(long long e) const;
  bool is_identity() const;
  std::string cycle_string() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<std::uint32_t> img_;
};

class PermGroup {
 public:
  PermGroup() = default;
  // Closure of the generators by breadth-first multiplication.
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::size_t element_cap = 1000000);
  // From a list already known to be closed; generators are chosen greedily.
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements);

  static PermGroup trivial(std::size_t degree);
  static PermGroup symmetric(std::size_t degree);
  static PermGroup cyclic(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  // Sorted; element 0 is the identity.
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  bool contains(const Perm& g) const;
  // Position of g in elements(); throws when absent.
  std::size_t index_of(const Perm& g) const;

  // Cayley table mul[i][j] = index of element(i)*element(j).
  std::vector<std::vector<std::uint32_t>> multiplication_table() const;
  bool is_closed() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

// Orbit of a point under the group.
std::vector<std::uint32_t> orbit(const PermGroup& g, std::uint32_t point);

// Generic orbit closure of a seed under a right action act(item, generator).
template <class T, class Act>
std::set<T> orbit(const PermGroup& g, const T& seed, Act&& act) {
  std::set<T> seen{seed};
  std::vector<T> frontier{seed};
  while (!frontier.empty()) {
    T cur = frontier.back();
    frontier.pop_back();
    for (auto& gen : g.generators()) {
      T nxt = act(cur, gen);
      if (seen.insert(nxt).second) frontier.push_back(std::move(nxt));
    }
  }
  return seen;
}

PermGroup stabilizer(const PermGroup& g, std::uint32_t point);
// Subgroup of elements for which pred holds (pred must define a subgroup).
PermGroup subgroup_where(const PermGroup& g, const std::function<bool(const Perm&)>& pred);

// Conjugacy classes as sorted lists of element indices, ordered by smallest member.
std::vector<std::vector<std::uint32_t>> conjugacy_classes(const PermGroup& g);

// Greedy generating set for a closed list of elements.
std::vector<Perm> generating_set(std::size_t degree, const std::vector<Perm>& elements);

}  // namespace dds
