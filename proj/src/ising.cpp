#include "dds/ising.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "dds/errors.hpp"

namespace dds {

namespace {

using boost::multiprecision::cpp_int;

std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_list(const Graph& g) {
  return {g.edges().begin(), g.edges().end()};
}

void merge_into(MicroTable& dst, const MicroTable& src) {
  for (auto& [e, c] : src.omega) dst.omega[e] += c;
  for (auto& [k, c] : src.joint) dst.joint[k] += c;
}

}  // namespace

std::vector<std::uint32_t> edge_orbits(const Graph& g, const PermGroup& group) {
  auto edges = edge_list(g);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < edges.size(); ++i) index[edges[i]] = i;
  constexpr std::uint32_t unset = UINT32_MAX;
  std::vector<std::uint32_t> cls(edges.size(), unset);
  std::uint32_t next = 0;
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    if (cls[i] != unset) continue;
    auto orb = orbit(group, edges[i], [](std::pair<std::uint32_t, std::uint32_t> e, const Perm& p) {
      const std::uint32_t a = p[e.first], b = p[e.second];
      return std::make_pair(std::min(a, b), std::max(a, b));
    });
    for (auto& e : orb) {
      auto it = index.find(e);
      if (it == index.end()) throw InvariantViolation("group does not preserve the edge set");
      cls[it->second] = next;
    }
    ++next;
  }
  return cls;
}

SpinModel SpinModel::uniform(Graph g, std::int64_t j, std::int64_t b) {
  SpinModel m;
  m.coupling.assign(g.edge_count(), j);
  m.graph = std::move(g);
  m.field = b;
  return m;
}

SpinModel SpinModel::by_edge_orbits(Graph g, const PermGroup& group, const std::vector<std::int64_t>& class_couplings,
                                    std::int64_t b) {
  auto cls = edge_orbits(g, group);
  SpinModel m;
  for (auto c : cls) {
    if (c >= class_couplings.size()) throw InputError("missing coupling for an edge orbit");
    m.coupling.push_back(class_couplings[c]);
  }
  m.graph = std::move(g);
  m.field = b;
  return m;
}

bool SpinModel::respects(const PermGroup& group) const {
  auto cls = edge_orbits(graph, group);
  std::map<std::uint32_t, std::int64_t> seen;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    auto [it, fresh] = seen.emplace(cls[i], coupling[i]);
    if (!fresh && it->second != coupling[i]) return false;
  }
  return true;
}

std::int64_t energy(State s, const SpinModel& m) {
  std::int64_t e = 0;
  std::size_t i = 0;
  for (auto [u, v] : m.graph.edges()) {
    const bool aligned = ((s >> u) & 1u) == ((s >> v) & 1u);
    e -= aligned ? m.coupling[i] : -m.coupling[i];
    ++i;
  }
  return e - m.field * magnetization(s, m.graph.vertex_count());
}

std::int64_t magnetization(State s, std::size_t n) {
  const auto up = static_cast<std::int64_t>(std::popcount(n >= 64 ? s : (s & ((State{1} << n) - 1))));
  return 2 * up - static_cast<std::int64_t>(n);
}

std::uint64_t MicroTable::total() const {
  std::uint64_t t = 0;
  for (auto& [e, c] : omega) t += c;
  return t;
}

MicroTable micro_table(const SpinModel& m, const PermGroup& group, const InternalSymmetry& internal, bool with_joint,
                       const SweepOptions& opts) {
  if (group.degree() != m.graph.vertex_count()) throw InputError("group degree does not match the graph");
  if (!m.respects(group)) throw InputError("couplings are not constant on edge orbits");
  // the only non-trivial internal map for spins is the global flip
  bool flip = false;
  for (auto& g : internal.generators) flip = flip || !g.is_identity();
  if (flip && (internal.local || m.field != 0)) throw InputError("spin flip is a symmetry only globally and at zero field");
  auto orb = orbits_on_states(group, 2, internal, opts);
  const std::size_t n = m.graph.vertex_count();
  const unsigned w = std::max(1u, opts.workers);
  std::vector<MicroTable> part(w);
  parallel_chunks(orb.orbit_count(), w, [&](unsigned k, std::uint64_t b, std::uint64_t e) {
    for (auto o = b; o < e; ++o) {
      const State s = orb.representative[o];
      const auto en = energy(s, m);
      part[k].omega[en] += orb.size[o];
      if (!with_joint) continue;
      const auto mag = magnetization(s, n);
      // a flipped orbit holds +M and -M in equal halves
      if (flip && mag != 0) {
        part[k].joint[{en, mag}] += orb.size[o] / 2;
        part[k].joint[{en, -mag}] += orb.size[o] / 2;
      } else {
        part[k].joint[{en, mag}] += orb.size[o];
      }
    }
  });
  MicroTable out;
  out.points = n;
  for (auto& p : part) merge_into(out, p);
  if (out.total() != state_count(n, 2)) throw InvariantViolation("orbit sizes do not cover the state space");
  return out;
}

MicroTable micro_table_brute(const SpinModel& m, bool with_joint, const SweepOptions& opts) {
  const std::size_t n = m.graph.vertex_count();
  const auto total = state_count(n, 2);
  if (total > opts.state_cap) throw CapExceeded("state space exceeds sweep cap");
  const unsigned w = std::max(1u, opts.workers);
  std::vector<MicroTable> part(w);
  parallel_chunks(total, w, [&](unsigned k, std::uint64_t b, std::uint64_t e) {
    for (auto s = b; s < e; ++s) {
      const auto en = energy(s, m);
      ++part[k].omega[en];
      if (with_joint) ++part[k].joint[{en, magnetization(s, n)}];
    }
  });
  MicroTable out;
  out.points = n;
  for (auto& p : part) merge_into(out, p);
  return out;
}

std::vector<EntropyPoint> entropy_curve(const MicroTable& t) {
  std::vector<EntropyPoint> out;
  for (auto& [e, c] : t.omega)
    if (c > 0) out.push_back({e, std::log(static_cast<double>(c))});
  return out;
}

std::vector<IntruderInterval> convex_intruders(const MicroTable& t) {
  std::vector<std::pair<std::int64_t, std::uint64_t>> lv;
  for (auto& [e, c] : t.omega)
    if (c > 0) lv.emplace_back(e, c);
  std::vector<IntruderInterval> out;
  if (lv.size() < 3) return out;
  std::vector<IntruderLevel> flagged;
  std::vector<std::size_t> where;
  for (std::size_t i = 1; i + 1 < lv.size(); ++i) {
    const std::int64_t up = lv[i + 1].first - lv[i].first;
    const std::int64_t down = lv[i].first - lv[i - 1].first;
    const std::int64_t g = std::gcd(up, down);
    IntruderLevel L{lv[i - 1].first, lv[i].first, lv[i + 1].first, up / g, down / g, 0, 0};
    L.lhs = boost::multiprecision::pow(cpp_int(lv[i].second), static_cast<unsigned>(L.p + L.q));
    L.rhs = boost::multiprecision::pow(cpp_int(lv[i - 1].second), static_cast<unsigned>(L.p)) *
            boost::multiprecision::pow(cpp_int(lv[i + 1].second), static_cast<unsigned>(L.q));
    if (L.lhs < L.rhs) {
      flagged.push_back(std::move(L));
      where.push_back(i);
    }
  }
  for (std::size_t k = 0; k < flagged.size(); ++k) {
    if (k == 0 || where[k] != where[k - 1] + 1) {
      out.push_back({flagged[k].e_prev, flagged[k].e_next, {}});
    }
    out.back().e_high = flagged[k].e_next;
    out.back().levels.push_back(flagged[k]);
  }
  return out;
}

std::string micro_table_csv(const MicroTable& t) {
  std::string s = "E,omega,entropy\n";
  char buf[96];
  for (auto& [e, c] : t.omega) {
    std::snprintf(buf, sizeof buf, "%lld,%llu,%.12f\n", static_cast<long long>(e), static_cast<unsigned long long>(c),
                  c ? std::log(static_cast<double>(c)) : 0.0);
    s += buf;
  }
  return s;
}

nlohmann::ordered_json intruder_json(const std::vector<IntruderInterval>& v, std::size_t n) {
  auto arr = nlohmann::ordered_json::array();
  for (auto& iv : v) {
    nlohmann::ordered_json j;
    j["energy"] = {iv.e_low, iv.e_high};
    j["specific_energy"] = {static_cast<double>(iv.e_low) / static_cast<double>(n),
                            static_cast<double>(iv.e_high) / static_cast<double>(n)};
    auto lv = nlohmann::ordered_json::array();
    for (auto& L : iv.levels) {
      lv.push_back({{"E", L.e},
                    {"neighbors", {L.e_prev, L.e_next}},
                    {"p", L.p},
                    {"q", L.q},
                    {"margin", {L.lhs.str(), L.rhs.str()}}});
    }
    j["levels"] = lv;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace dds
