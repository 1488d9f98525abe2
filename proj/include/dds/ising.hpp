#pragma once

// Exact microcanonical counts for Ising-type spin models on small graphs.
// State bit x = 1 means spin +1, bit 0 means spin -1.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "dds/graph.hpp"
#include "dds/parallel.hpp"
#include "dds/perm.hpp"
#include "dds/state_orbits.hpp"

namespace dds {

// H = -sum_edges J_e s_i s_j - B sum_i s_i, all integer.
struct SpinModel {
  Graph graph;
  std::vector<std::int64_t> coupling;  // per edge, in graph.edges() order
  std::int64_t field = 0;

  static SpinModel uniform(Graph g, std::int64_t j = 1, std::int64_t b = 0);
  // One coupling per orbit of `group` on undirected edges; orbits are
  // numbered by their smallest edge.
  static SpinModel by_edge_orbits(Graph g, const PermGroup& group, const std::vector<std::int64_t>& class_couplings,
                                  std::int64_t b = 0);

  // True when every coupling is constant on the group's edge orbits.
  bool respects(const PermGroup& group) const;
};

// Edge orbit id per edge (graph.edges() order).
std::vector<std::uint32_t> edge_orbits(const Graph& g, const PermGroup& group);

std::int64_t energy(State s, const SpinModel& m);
std::int64_t magnetization(State s, std::size_t n);

struct MicroTable {
  std::size_t points = 0;
  std::map<std::int64_t, std::uint64_t> omega;                          // E -> count
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> joint;  // (E, M) -> count, optional

  std::uint64_t total() const;
  bool operator==(const MicroTable&) const = default;
};

// Counts accumulated over state orbits of `group` (plus any internal symmetry,
// which must preserve the energy).
MicroTable micro_table(const SpinModel& m, const PermGroup& group, const InternalSymmetry& internal = {},
                       bool with_joint = false, const SweepOptions& opts = {});
// Direct enumeration of every state.
MicroTable micro_table_brute(const SpinModel& m, bool with_joint = false, const SweepOptions& opts = {});

struct EntropyPoint {
  std::int64_t energy;
  double entropy;
};
std::vector<EntropyPoint> entropy_curve(const MicroTable& t);

struct IntruderLevel {
  std::int64_t e_prev, e, e_next;
  std::int64_t p, q;  // (e_next - e) / (e - e_prev) = p / q in lowest terms
  // omega_e^(p+q) and omega_prev^p * omega_next^q; the level is flagged when lhs < rhs
  boost::multiprecision::cpp_int lhs, rhs;
};

struct IntruderInterval {
  std::int64_t e_low, e_high;  // enclosing neighbours of the flagged run
  std::vector<IntruderLevel> levels;
};

std::vector<IntruderInterval> convex_intruders(const MicroTable& t);

std::string micro_table_csv(const MicroTable& t);
nlohmann::ordered_json intruder_json(const std::vector<IntruderInterval>& v, std::size_t n);

}  // namespace dds
