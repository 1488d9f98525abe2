#pragma once

#include <cstdint>
#include <vector>

#include "dds/graph.hpp"
#include "dds/local_rule.hpp"
#include "dds/state_orbits.hpp"

namespace dds {

// Synchronous evolution of a local rule on a graph. Neighbour slot j of
// vertex x is graph.neighbors(x)[j].
class Automaton {
 public:
  Automaton(LocalRule rule, Graph graph);

  const LocalRule& rule() const { return rule_; }
  const Graph& graph() const { return graph_; }
  std::size_t size() const { return graph_.vertex_count(); }

  State step(State s) const;
  std::vector<State> trajectory(State s, std::size_t steps) const;

 private:
  LocalRule rule_;
  Graph graph_;
  std::vector<State> masks_;  // binary symmetric fast path: neighbour bitmask per vertex
  bool fast_ = false;
};

// Per-cell vector helpers for examples that are easier to read that way.
State pack_cells(const std::vector<std::uint32_t>& cells, std::uint32_t q);
std::vector<std::uint32_t> unpack_cells(State s, std::size_t n, std::uint32_t q);

}  // namespace dds
