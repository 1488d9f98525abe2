#pragma once

// Discrete relations stored as dense bit tables over a multi-radix hypercube.
//
// A relation lives on an ordered domain of points; tuple (s_0, ..., s_{k-1})
// has index s_0 + s_1*q_0 + s_2*q_0*q_1 + ... (little-endian), and bit i of
// the table is set iff that tuple is a member. All operations return new
// values; a Relation is never mutated after it leaves its constructor.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dds {

struct Point {
  std::uint32_t id = 0;
  std::string label;

  bool operator==(const Point&) const = default;
};

// Hard limit on the bit length of any relation (product of radices).
std::uint64_t relation_bit_cap();
void set_relation_bit_cap(std::uint64_t cap);

class Domain {
 public:
  Domain() = default;
  // `radices` holds either one entry per point or a single uniform radix.
  Domain(std::vector<Point> points, std::vector<std::uint32_t> radices);

  // Points labelled in order with ids 0..n-1.
  static Domain from_labels(const std::vector<std::string>& labels, std::uint32_t q = 2);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& point(std::size_t pos) const { return points_[pos]; }
  const std::vector<Point>& points() const { return points_; }
  std::uint32_t radix(std::size_t pos) const { return radices_[pos]; }
  const std::vector<std::uint32_t>& radices() const { return radices_; }
  bool uniform() const;

  // Product of radices; throws CapExceeded above relation_bit_cap().
  std::uint64_t volume() const;

  std::optional<std::size_t> position_of(std::uint32_t id) const;
  std::optional<std::size_t> position_of(std::string_view label) const;
  // Set inclusion by point id (radices must agree on shared points).
  bool contains(const Domain& other) const;
  bool same_points(const Domain& other) const;

  Domain without(std::size_t pos) const;
  Domain select(std::span<const std::size_t> positions) const;
  // This domain followed by the points of `other` not already present.
  Domain union_with(const Domain& other) const;
  // Sorted point ids; a canonical key for the point set.
  std::vector<std::uint32_t> id_set() const;
  std::vector<std::string> labels() const;

  bool operator==(const Domain&) const = default;

 private:
  std::vector<Point> points_;
  std::vector<std::uint32_t> radices_;
};

std::uint64_t index_of(std::span<const std::uint32_t> tuple, const Domain& domain);
std::vector<std::uint32_t> tuple_of(std::uint64_t index, const Domain& domain);

class Relation {
 public:
  Relation() = default;
  static Relation empty(Domain domain);
  static Relation trivial(Domain domain);
  // Text of '0'/'1' characters, index 0 first.
  static Relation from_bits(Domain domain, std::string_view bits);
  template <class Pred>
  static Relation from_predicate(Domain domain, Pred&& member);
  static Relation from_indices(Domain domain, std::span<const std::uint64_t> members);

  const Domain& domain() const { return domain_; }
  std::uint64_t volume() const { return volume_; }
  bool contains(std::uint64_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  bool contains(std::span<const std::uint32_t> tuple) const {
    return contains(index_of(tuple, domain_));
  }
  std::uint64_t count() const;
  bool is_empty() const;
  bool is_trivial() const;

  std::string bit_string() const;
  // Bit table as the binary integer sum bit_i 2^i, in hexadecimal.
  std::string hex() const;

  // Set operations on relations with identical ordered domains.
  Relation operator&(const Relation& other) const;
  Relation operator|(const Relation& other) const;
  Relation complement() const;
  bool subset_of(const Relation& other) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const Relation&) const = default;

 private:
  Relation(Domain domain, bool fill);
  void set(std::uint64_t index) { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  void clear_tail();

  Domain domain_;
  std::uint64_t volume_ = 0;
  std::vector<std::uint64_t> words_;

  friend class RelationBuilder;
};

// Mutable staging area used by the algorithms that fill bit tables.
class RelationBuilder {
 public:
  explicit RelationBuilder(Domain domain) : rel_(std::move(domain), false) {}
  void set(std::uint64_t index) { rel_.set(index); }
  Relation build() && { return std::move(rel_); }

 private:
  Relation rel_;
};

template <class Pred>
Relation Relation::from_predicate(Domain domain, Pred&& member) {
  RelationBuilder b(domain);
  const std::uint64_t n = domain.volume();
  std::vector<std::uint32_t> tuple(domain.size(), 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (member(std::span<const std::uint32_t>(tuple))) b.set(i);
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      if (++tuple[j] < domain.radix(j)) break;
      tuple[j] = 0;
    }
  }
  return std::move(b).build();
}

// R x Sigma^(superset \ domain). Also reorders when the point sets coincide.
Relation extend(const Relation& r, const Domain& superset);
// Existential projection onto a subset of the domain; the result keeps the
// parent's point order regardless of the order given in `sub`.
Relation project(const Relation& r, const Domain& sub);
// True iff extend(q, r.domain) contains r.
bool is_consequence(const Relation& r, const Relation& q);
bool is_functional(const Relation& r, std::size_t position);
// Intersection of all extensions to the union of domains (first-seen order).
Relation base_relation(std::span<const Relation> system);

// Non-trivial projections onto the maximal proper subsets of the domain, in
// order of the dropped position.
std::vector<Relation> proper_consequences(const Relation& r);
bool is_prime(const Relation& r);
Relation principal_factor(const Relation& r, std::span<const Relation> consequences);
Relation principal_factor(const Relation& r);
// Trivial relations are reducible and empty relations irreducible by convention.
bool is_reducible(const Relation& r);

struct Decomposition {
  Relation source;
  std::vector<Relation> consequences;
  Relation principal_factor;
  // One entry per consequence; null when that consequence is prime.
  std::vector<std::shared_ptr<const Decomposition>> children;
  bool prime = false;
  bool reducible = false;
};

// Recursive canonical decomposition. Nodes on equal point sets are shared,
// since every node is a projection of the root.
std::shared_ptr<const Decomposition> canonical_decompose(const Relation& r);

// Bit-exact check of R = PF ∩ (∩ extended consequences) at every node.
bool reconstructs(const Decomposition& node);

// Irreducible non-trivial relations whose intersection (extended) is r.
std::vector<Relation> irreducible_components(const Relation& r);

struct SimplicialComplex {
  std::vector<Point> points;
  std::vector<Domain> maximal_simplices;

  // Point-id sets of the connected components, sorted.
  std::vector<std::vector<std::uint32_t>> connected_components() const;
};

SimplicialComplex complex_of(std::span<const Relation> relations);

}  // namespace dds
