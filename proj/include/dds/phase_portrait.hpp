#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dds/automaton.hpp"
#include "dds/parallel.hpp"
#include "dds/perm.hpp"
#include "dds/state_orbits.hpp"

namespace dds {

struct Fraction {
  std::uint64_t num = 0, den = 1;
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  bool operator==(const Fraction&) const = default;
};

Fraction make_fraction(std::uint64_t num, std::uint64_t den);

// Dynamics on the orbit quotient.
struct PhasePortrait {
  StateOrbits orbits;
  std::vector<std::uint32_t> successor;       // orbit -> orbit
  std::vector<std::vector<std::uint32_t>> cycles;  // each starts at its smallest orbit id
  std::vector<std::uint32_t> attractor;       // orbit -> index into cycles
  std::vector<std::uint32_t> depth;           // steps until the orbit reaches its cycle
  std::vector<std::uint64_t> basin_states;    // per cycle: states flowing into it
  std::vector<Fraction> weights;              // basin_states / q^N

  nlohmann::ordered_json to_json() const;
};

// Throws InvariantViolation when the rule does not commute with the group
// (the quotient map would be ill defined).
PhasePortrait phase_portrait(const Automaton& automaton, const PermGroup& group, const SweepOptions& opts = {});

// Brute-force functional graph on all states.
struct StateDynamics {
  std::vector<State> attractor_min;   // per state: smallest state of the cycle it falls into
  std::vector<std::uint32_t> cycle_length;  // per state: length of that cycle
};
StateDynamics state_dynamics(const Automaton& automaton, const SweepOptions& opts = {});

struct Recurrence {
  std::vector<State> canonical;   // canonical representative at each time
  std::size_t t0 = 0, t1 = 0;     // first time t1 whose orbit matches an earlier t0
  Perm witness;                   // space element with sigma_t0 * witness = sigma_t1
};

// Scans times 1..horizon; throws InputError when no orbit repeats.
Recurrence orbit_recurrence(const Automaton& automaton, State start, const PermGroup& group, std::size_t horizon);

// Space element mapping a onto b, if any (first in element order).
std::optional<Perm> find_witness(const PermGroup& group, State a, State b, std::uint32_t q);

}  // namespace dds
