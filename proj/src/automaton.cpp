#include "dds/automaton.hpp"

#include <bit>

#include "dds/errors.hpp"

namespace dds {

Automaton::Automaton(LocalRule rule, Graph graph) : rule_(std::move(rule)), graph_(std::move(graph)) {
  for (std::uint32_t x = 0; x < graph_.vertex_count(); ++x)
    if (graph_.neighbors(x).size() != rule_.valence()) throw InputError("graph valence does not match the rule");
  if (!states_encodable(graph_.vertex_count(), rule_.radix())) throw CapExceeded("states do not fit in 64 bits");
  fast_ = rule_.radix() == 2 && rule_.is_symmetric() && graph_.vertex_count() <= 64;
  if (fast_) {
    for (std::uint32_t x = 0; x < graph_.vertex_count(); ++x) {
      State m = 0;
      for (auto y : graph_.neighbors(x)) m |= State{1} << y;
      masks_.push_back(m);
    }
  }
}

State Automaton::step(State s) const {
  const auto n = graph_.vertex_count();
  if (fast_) {
    State out = 0;
    for (std::size_t x = 0; x < n; ++x) {
      auto cnt = static_cast<std::uint32_t>(std::popcount(s & masks_[x]));
      if (rule_.next_by_count((s >> x) & 1u, cnt)) out |= State{1} << x;
    }
    return out;
  }
  const auto q = rule_.radix();
  auto cells = unpack_cells(s, n, q);
  std::vector<std::uint32_t> next(n), nb(rule_.valence());
  for (std::uint32_t x = 0; x < n; ++x) {
    const auto& adj = graph_.neighbors(x);
    for (std::size_t j = 0; j < adj.size(); ++j) nb[j] = cells[adj[j]];
    next[x] = rule_.next(cells[x], nb);
  }
  return pack_cells(next, q);
}

std::vector<State> Automaton::trajectory(State s, std::size_t steps) const {
  std::vector<State> out{s};
  for (std::size_t t = 0; t < steps; ++t) out.push_back(s = step(s));
  return out;
}

State pack_cells(const std::vector<std::uint32_t>& cells, std::uint32_t q) {
  if (!states_encodable(cells.size(), q)) throw CapExceeded("states do not fit in 64 bits");
  State s = 0, p = 1;
  for (auto v : cells) {
    if (v >= q) throw InputError("cell value out of range");
    s += v * p;
    p *= q;
  }
  return s;
}

std::vector<std::uint32_t> unpack_cells(State s, std::size_t n, std::uint32_t q) {
  std::vector<std::uint32_t> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    out[x] = static_cast<std::uint32_t>(s % q);
    s /= q;
  }
  return out;
}

}  // namespace dds
