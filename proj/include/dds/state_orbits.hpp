#pragma once

// Group actions on full states sigma: X -> {0..q-1}. A state is stored as its
// base-q index with vertex 0 as the least significant digit (a bitset for q=2).
// Space elements act naturally: the value at x moves to x*g.

#include <cstdint>
#include <map>
#include <vector>

#include "dds/parallel.hpp"
#include "dds/perm.hpp"

namespace dds {

using State = std::uint64_t;

// q^n; throws CapExceeded when that count itself overflows.
std::uint64_t state_count(std::size_t n, std::uint32_t q);
// Every state fits in a State (q^n <= 2^64), e.g. 64 binary cells.
bool states_encodable(std::size_t n, std::uint32_t q);
std::uint32_t state_value(State s, std::size_t x, std::uint32_t q);
State with_value(State s, std::size_t x, std::uint32_t q, std::uint32_t v);

// Precomputed relabelling of vertices, applied to whole states.
class PointPermuter {
 public:
  PointPermuter(const Perm& g, std::uint32_t q);
  State apply(State s) const;

 private:
  Perm g_;
  std::uint32_t q_;
  std::vector<std::vector<State>> byte_table_;  // q == 2 only
};

// Permutations of the value set {0..q-1}; applied at every point (global)
// or one point at a time (local gauge).
struct InternalSymmetry {
  std::vector<Perm> generators;
  bool local = false;
};

State apply_internal(State s, std::size_t n, std::uint32_t q, const Perm& gamma);

struct StateOrbits {
  std::size_t points = 0;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> orbit_of;     // state -> orbit id
  std::vector<State> representative;       // smallest state index in the orbit
  std::vector<std::uint64_t> size;

  std::size_t orbit_count() const { return representative.size(); }
  // orbit size -> number of orbits
  std::map<std::uint64_t, std::uint64_t> histogram() const;
};

// Orbit ids are assigned in increasing order of representative.
StateOrbits orbits_on_states(const PermGroup& g, std::uint32_t q, const InternalSymmetry& internal = {},
                             const SweepOptions& opts = {});

// Minimal image of s under the space group combined with global internal
// symmetry (all elements enumerated).
State canonical_representative(State s, const PermGroup& g, std::uint32_t q,
                               const std::vector<Perm>& internal_elements = {});

// Space-group elements fixing s.
PermGroup state_stabilizer(const PermGroup& g, State s, std::uint32_t q);

}  // namespace dds
