#include "dds/state_orbits.hpp"

#include <algorithm>

#include "dds/errors.hpp"

namespace dds {

std::uint64_t state_count(std::size_t n, std::uint32_t q) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > UINT64_MAX / q) throw CapExceeded("state space does not fit in 64 bits");
    total *= q;
  }
  return total;
}

bool states_encodable(std::size_t n, std::uint32_t q) {
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= q;
    if (total > (static_cast<unsigned __int128>(1) << 64)) return false;
  }
  return true;
}

namespace {

std::uint64_t q_pow(std::uint32_t q, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= q;
  return r;
}

}  // namespace

std::uint32_t state_value(State s, std::size_t x, std::uint32_t q) {
  if (q == 2) return static_cast<std::uint32_t>((s >> x) & 1u);
  return static_cast<std::uint32_t>((s / q_pow(q, x)) % q);
}

State with_value(State s, std::size_t x, std::uint32_t q, std::uint32_t v) {
  if (q == 2) return v ? (s | (State{1} << x)) : (s & ~(State{1} << x));
  const std::uint64_t p = q_pow(q, x);
  const std::uint32_t old = static_cast<std::uint32_t>((s / p) % q);
  return s - old * p + std::uint64_t{v} * p;
}

PointPermuter::PointPermuter(const Perm& g, std::uint32_t q) : g_(g), q_(q) {
  if (q_ == 2) {
    if (g_.degree() > 64) throw CapExceeded("binary states limited to 64 points");
    const std::size_t bytes = (g_.degree() + 7) / 8;
    byte_table_.assign(bytes, std::vector<State>(256, 0));
    for (std::size_t b = 0; b < bytes; ++b)
      for (std::uint32_t v = 0; v < 256; ++v) {
        State out = 0;
        for (std::size_t bit = 0; bit < 8; ++bit) {
          std::size_t x = 8 * b + bit;
          if (x < g_.degree() && ((v >> bit) & 1u)) out |= State{1} << g_[x];
        }
        byte_table_[b][v] = out;
      }
  }
}

State PointPermuter::apply(State s) const {
  if (q_ == 2) {
    State out = 0;
    for (std::size_t b = 0; b < byte_table_.size(); ++b) out |= byte_table_[b][(s >> (8 * b)) & 0xff];
    return out;
  }
  State out = 0;
  for (std::size_t x = 0; x < g_.degree(); ++x) {
    out += std::uint64_t{static_cast<std::uint32_t>(s % q_)} * q_pow(q_, g_[x]);
    s /= q_;
  }
  return out;
}

State apply_internal(State s, std::size_t n, std::uint32_t q, const Perm& gamma) {
  if (gamma.degree() != q) throw InputError("internal permutation must act on the state values");
  State out = 0;
  std::uint64_t p = 1;
  for (std::size_t x = 0; x < n; ++x) {
    out += std::uint64_t{gamma[s % q]} * p;
    s /= q;
    p *= q;
  }
  return out;
}

std::map<std::uint64_t, std::uint64_t> StateOrbits::histogram() const {
  std::map<std::uint64_t, std::uint64_t> h;
  for (auto s : size) ++h[s];
  return h;
}

StateOrbits orbits_on_states(const PermGroup& g, std::uint32_t q, const InternalSymmetry& internal,
                             const SweepOptions& opts) {
  const std::size_t n = g.degree();
  const std::uint64_t total = state_count(n, q);
  if (total > opts.state_cap) throw CapExceeded("state space exceeds sweep cap");

  std::vector<PointPermuter> space;
  for (auto& gen : g.generators()) space.emplace_back(gen, q);
  // local internal symmetry: one generator per (gamma, point)
  auto image = [&](State s, std::size_t which) -> State {
    if (which < space.size()) return space[which].apply(s);
    which -= space.size();
    const auto& gamma = internal.generators[internal.local ? which / n : which];
    if (!internal.local) return apply_internal(s, n, q, gamma);
    const std::size_t x = which % n;
    return with_value(s, x, q, gamma[state_value(s, x, q)]);
  };
  const std::size_t gen_count =
      space.size() + internal.generators.size() * (internal.local ? n : 1);

  StateOrbits out;
  out.points = n;
  out.q = q;
  constexpr std::uint32_t unseen = UINT32_MAX;
  out.orbit_of.assign(total, unseen);
  std::vector<State> stack;
  for (State s = 0; s < total; ++s) {
    if (out.orbit_of[s] != unseen) continue;
    const auto id = static_cast<std::uint32_t>(out.representative.size());
    if (id == unseen) throw CapExceeded("too many orbits");
    out.representative.push_back(s);
    std::uint64_t count = 1;
    out.orbit_of[s] = id;
    stack.assign(1, s);
    while (!stack.empty()) {
      State cur = stack.back();
      stack.pop_back();
      for (std::size_t k = 0; k < gen_count; ++k) {
        State t = image(cur, k);
        if (out.orbit_of[t] == unseen) {
          out.orbit_of[t] = id;
          ++count;
          stack.push_back(t);
        }
      }
    }
    out.size.push_back(count);
  }
  return out;
}

State canonical_representative(State s, const PermGroup& g, std::uint32_t q,
                               const std::vector<Perm>& internal_elements) {
  State best = s;
  std::vector<State> inner{s};
  for (auto& gamma : internal_elements) inner.push_back(apply_internal(s, g.degree(), q, gamma));
  for (auto& e : g.elements()) {
    PointPermuter pp(e, q);
    for (auto t : inner) best = std::min(best, pp.apply(t));
  }
  return best;
}

PermGroup state_stabilizer(const PermGroup& g, State s, std::uint32_t q) {
  return subgroup_where(g, [&](const Perm& p) { return PointPermuter(p, q).apply(s) == s; });
}

}  // namespace dds
