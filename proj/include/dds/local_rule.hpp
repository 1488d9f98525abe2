#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dds/relation.hpp"

namespace dds {

// Next-state rule for a vertex with k ordered neighbour slots. The slots are
// partitioned into classes; the rule sees the centre value plus, for each
// class, only the multiset of values in that class. One class of all slots
// is a k-symmetric rule, singleton classes give a fully ordered rule.
class LocalRule {
 public:
  using Fn = std::function<std::uint32_t(std::uint32_t centre, std::span<const std::uint32_t> neighbors)>;

  static LocalRule from_function(std::uint32_t k, std::uint32_t q, std::vector<std::vector<std::uint32_t>> classes,
                                 const Fn& f);
  static LocalRule symmetric(std::uint32_t k, std::uint32_t q, const Fn& f);
  // Binary k-symmetric rule: born on counts in B, survives on counts in S.
  static LocalRule from_bs(const std::set<std::uint32_t>& birth, const std::set<std::uint32_t>& survival,
                           std::uint32_t k);
  // "B3/S23" style text.
  static LocalRule from_bs_string(const std::string& text, std::uint32_t k);
  // Binary k-symmetric rule numbered by next = bit (2*count + centre) of n.
  static LocalRule from_symmetric_number(std::uint64_t n, std::uint32_t k);
  // Elementary rule on slots [left, right]; next = bit (4*left + 2*centre + right).
  static LocalRule from_wolfram(std::uint32_t n);
  static LocalRule identity(std::uint32_t k, std::uint32_t q);

  std::uint32_t valence() const { return k_; }
  std::uint32_t radix() const { return q_; }
  const std::vector<std::vector<std::uint32_t>>& classes() const { return classes_; }
  bool is_symmetric() const { return classes_.size() <= 1; }
  std::uint32_t next(std::uint32_t centre, std::span<const std::uint32_t> neighbors) const;
  // Binary symmetric only: next state from centre and live-neighbour count.
  std::uint32_t next_by_count(std::uint32_t centre, std::uint32_t count) const {
    return count_table_[centre * (k_ + 1) + count];
  }

  std::pair<std::set<std::uint32_t>, std::set<std::uint32_t>> bs() const;
  std::string bs_string() const;
  std::uint64_t symmetric_number() const;
  // Bits of symmetric_number() written index 0 first.
  std::string symmetric_bit_string() const;

  bool operator==(const LocalRule& o) const { return k_ == o.k_ && q_ == o.q_ && classes_ == o.classes_ && table_ == o.table_; }

 private:
  std::uint64_t key(std::uint32_t centre, std::span<const std::uint32_t> neighbors) const;
  void build_count_table();

  std::uint32_t k_ = 0, q_ = 2;
  std::vector<std::vector<std::uint32_t>> classes_;
  std::vector<std::uint64_t> class_radix_;              // number of multisets per class
  std::vector<std::vector<std::uint32_t>> class_rank_;  // raw count code -> dense rank
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> count_table_;
};

// Number of binary rules expressible by birth/survival lists at valence k.
boost::multiprecision::cpp_int bs_rule_count(std::uint32_t k);
// Number of q-ary k-symmetric rules.
boost::multiprecision::cpp_int symmetric_rule_count(std::uint32_t q, std::uint32_t k);

// Local relation of an elementary rule on {p, q, r, s}: left, centre, right, next.
Relation eca_relation(std::uint32_t n);
// Local relation of a rule on {x1..xk, x(k+1), x(k+2)}: neighbours, centre, next.
Relation rule_relation(const LocalRule& rule);
// Life on the 8-neighbourhood, x1..x8 neighbours, x9 centre, x10 next.
Relation life_relation();

}  // namespace dds
