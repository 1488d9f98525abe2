#include "dds/phase_portrait.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "dds/errors.hpp"

namespace dds {

Fraction make_fraction(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InvariantViolation("zero denominator");
  auto g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

namespace {

// Cycles of a functional graph on 0..n-1, each rotated to start at its
// smallest node, listed in order of that node; plus per-node attractor/depth.
void analyze_functional_graph(const std::vector<std::uint32_t>& next, std::vector<std::vector<std::uint32_t>>& cycles,
                              std::vector<std::uint32_t>& attractor, std::vector<std::uint32_t>& depth) {
  const std::size_t n = next.size();
  constexpr std::uint32_t none = UINT32_MAX;
  std::vector<std::uint8_t> mark(n, 0);  // 0 new, 1 on current walk, 2 done
  attractor.assign(n, none);
  depth.assign(n, 0);
  std::vector<std::uint32_t> walk;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (mark[s]) continue;
    walk.clear();
    std::uint32_t x = s;
    while (!mark[x]) {
      mark[x] = 1;
      walk.push_back(x);
      x = next[x];
    }
    if (mark[x] == 1) {
      // new cycle starting at x inside the walk
      auto pos = std::find(walk.begin(), walk.end(), x);
      std::vector<std::uint32_t> cyc(pos, walk.end());
      auto mn = std::min_element(cyc.begin(), cyc.end());
      std::rotate(cyc.begin(), mn, cyc.end());
      const auto id = static_cast<std::uint32_t>(cycles.size());
      for (auto c : cyc) {
        attractor[c] = id;
        depth[c] = 0;
        mark[c] = 2;
      }
      cycles.push_back(std::move(cyc));
      walk.erase(pos, walk.end());
    }
    // remaining walk nodes lead into an already classified node
    for (std::size_t i = walk.size(); i-- > 0;) {
      auto w = walk[i];
      attractor[w] = attractor[next[w]];
      depth[w] = depth[next[w]] + 1;
      mark[w] = 2;
    }
  }
  // renumber cycles by their smallest node
  std::vector<std::uint32_t> order(cycles.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return cycles[a][0] < cycles[b][0]; });
  std::vector<std::uint32_t> remap(cycles.size());
  std::vector<std::vector<std::uint32_t>> sorted;
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = i;
    sorted.push_back(std::move(cycles[order[i]]));
  }
  cycles = std::move(sorted);
  for (auto& a : attractor) a = remap[a];
}

}  // namespace

PhasePortrait phase_portrait(const Automaton& automaton, const PermGroup& group, const SweepOptions& opts) {
  if (group.degree() != automaton.size()) throw InputError("group degree does not match the graph");
  const auto q = automaton.rule().radix();
  PhasePortrait pp;
  pp.orbits = orbits_on_states(group, q, {}, opts);
  const auto& orb = pp.orbits;
  const std::size_t m = orb.orbit_count();
  pp.successor.assign(m, 0);
  parallel_chunks(m, opts.workers, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    for (auto o = b; o < e; ++o) pp.successor[o] = orb.orbit_of[automaton.step(orb.representative[o])];
  });
  // every state, not just representatives, must land in the predicted orbit
  std::atomic<bool> ok{true};
  parallel_chunks(orb.orbit_of.size(), opts.workers, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    for (auto s = b; s < e && ok.load(std::memory_order_relaxed); ++s)
      if (orb.orbit_of[automaton.step(s)] != pp.successor[orb.orbit_of[s]]) ok = false;
  });
  if (!ok) throw InvariantViolation("rule does not commute with the symmetry group; orbit quotient is ill defined");

  analyze_functional_graph(pp.successor, pp.cycles, pp.attractor, pp.depth);
  pp.basin_states.assign(pp.cycles.size(), 0);
  for (std::size_t o = 0; o < m; ++o) pp.basin_states[pp.attractor[o]] += orb.size[o];
  const auto total = static_cast<std::uint64_t>(orb.orbit_of.size());
  std::uint64_t check = 0;
  for (auto b : pp.basin_states) {
    pp.weights.push_back(make_fraction(b, total));
    check += b;
  }
  if (check != total) throw InvariantViolation("basin sizes do not cover the state space");
  return pp;
}

nlohmann::ordered_json PhasePortrait::to_json() const {
  nlohmann::ordered_json j;
  j["states"] = orbits.orbit_of.size();
  j["orbit_count"] = orbits.orbit_count();
  auto hist = nlohmann::ordered_json::object();
  for (auto [size, count] : orbits.histogram()) hist[std::to_string(size)] = count;
  j["orbit_size_histogram"] = hist;
  auto nodes = nlohmann::ordered_json::array();
  for (std::size_t o = 0; o < orbits.orbit_count(); ++o) {
    nodes.push_back({{"id", o},
                     {"representative", orbits.representative[o]},
                     {"size", orbits.size[o]},
                     {"successor", successor[o]},
                     {"cycle", attractor[o]},
                     {"depth", depth[o]}});
  }
  j["orbits"] = nodes;
  auto cyc = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    cyc.push_back({{"orbits", cycles[c]}, {"basin_states", basin_states[c]}, {"weight", weights[c].str()}});
  }
  j["cycles"] = cyc;
  return j;
}

StateDynamics state_dynamics(const Automaton& automaton, const SweepOptions& opts) {
  const auto total = state_count(automaton.size(), automaton.rule().radix());
  if (total > opts.state_cap) throw CapExceeded("state space exceeds sweep cap");
  std::vector<std::uint32_t> next(total);
  parallel_chunks(total, opts.workers, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    for (auto s = b; s < e; ++s) next[s] = static_cast<std::uint32_t>(automaton.step(s));
  });
  std::vector<std::vector<std::uint32_t>> cycles;
  std::vector<std::uint32_t> attractor, depth;
  analyze_functional_graph(next, cycles, attractor, depth);
  StateDynamics d;
  d.attractor_min.resize(total);
  d.cycle_length.resize(total);
  for (std::uint64_t s = 0; s < total; ++s) {
    d.attractor_min[s] = cycles[attractor[s]][0];
    d.cycle_length[s] = static_cast<std::uint32_t>(cycles[attractor[s]].size());
  }
  return d;
}

std::optional<Perm> find_witness(const PermGroup& group, State a, State b, std::uint32_t q) {
  for (auto& g : group.elements())
    if (PointPermuter(g, q).apply(a) == b) return g;
  return std::nullopt;
}

Recurrence orbit_recurrence(const Automaton& automaton, State start, const PermGroup& group, std::size_t horizon) {
  const auto q = automaton.rule().radix();
  Recurrence r;
  auto traj = automaton.trajectory(start, horizon);
  for (std::size_t t = 0; t <= horizon; ++t) {
    r.canonical.push_back(canonical_representative(traj[t], group, q));
    for (std::size_t t0 = 0; t0 < t; ++t0) {
      if (r.canonical[t0] != r.canonical[t]) continue;
      auto w = find_witness(group, traj[t0], traj[t], q);
      if (!w) throw InvariantViolation("equal canonical forms without a witness");
      r.t0 = t0;
      r.t1 = t;
      r.witness = *w;
      return r;
    }
  }
  throw InputError("no orbit recurrence within the horizon");
}

}  // namespace dds
