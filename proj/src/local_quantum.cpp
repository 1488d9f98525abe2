#include "dds/local_quantum.hpp"

#include <algorithm>
#include <numeric>

#include "dds/cyclotomic.hpp"
#include "dds/errors.hpp"

namespace dds {

Poly2 Poly2::monomial(std::int64_t c, std::uint32_t a, std::uint32_t b) {
  Poly2 p;
  p.add({a, b}, c);
  return p;
}

void Poly2::add(Key k, std::int64_t c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(k, c);
  if (!fresh) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) t_.erase(it);
  }
}

std::int64_t Poly2::coeff(std::uint32_t a, std::uint32_t b) const {
  auto it = t_.find({a, b});
  return it == t_.end() ? 0 : it->second;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  for (auto& [k, c] : o.t_) r.add(k, c);
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r;
  for (auto& [ka, ca] : t_)
    for (auto& [kb, cb] : o.t_) r.add({ka.first + kb.first, ka.second + kb.second}, checked_mul(ca, cb));
  return r;
}

std::string Poly2::to_string() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Key, std::int64_t>> ts(t_.begin(), t_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    auto dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
    if (dx != dy) return dx > dy;
    return x.first.first > y.first.first;
  });
  std::string s;
  for (auto& [k, c] : ts) {
    std::string mono;
    auto pw = [&](const char* sym, std::uint32_t e) {
      if (e == 0) return;
      mono += sym;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    pw("v", k.first);
    pw("w", k.second);
    if (!s.empty() && c > 0) s += "+";
    if (mono.empty())
      s += std::to_string(c);
    else if (c == 1)
      s += mono;
    else if (c == -1)
      s += "-" + mono;
    else
      s += std::to_string(c) + mono;
  }
  return s;
}

std::vector<std::vector<std::uint32_t>> arc_orbits(const Graph& g, const PermGroup& group) {
  if (group.degree() != g.vertex_count()) throw InputError("group degree does not match the graph");
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  constexpr std::uint32_t unset = UINT32_MAX;
  std::vector<std::vector<std::uint32_t>> cls(n);
  for (std::uint32_t x = 0; x < n; ++x) cls[x].assign(g.neighbors(x).size(), unset);
  auto slot_of = [&](std::uint32_t x, std::uint32_t y) -> std::size_t {
    const auto& nb = g.neighbors(x);
    auto it = std::find(nb.begin(), nb.end(), y);
    if (it == nb.end()) throw InvariantViolation("group does not preserve adjacency");
    return static_cast<std::size_t>(it - nb.begin());
  };
  std::uint32_t next = 0;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < cls[x].size(); ++j) {
      if (cls[x][j] != unset) continue;
      auto orb = orbit(group, std::make_pair(x, g.neighbors(x)[j]),
                       [](std::pair<std::uint32_t, std::uint32_t> a, const Perm& p) {
                         return std::make_pair(p[a.first], p[a.second]);
                       });
      for (auto [u, v] : orb) cls[u][slot_of(u, v)] = next;
      ++next;
    }
  return cls;
}

LocalQuantumModel LocalQuantumModel::from_classes(const Graph& g, const PermGroup& group,
                                                  const std::vector<Poly2>& class_weight) {
  auto cls = arc_orbits(g, group);
  LocalQuantumModel m;
  m.graph_ = g;
  m.weight_.resize(cls.size());
  for (std::size_t x = 0; x < cls.size(); ++x)
    for (auto c : cls[x]) {
      if (c >= class_weight.size()) throw InputError("missing weight for a directed-edge orbit");
      m.weight_[x].push_back(class_weight[c]);
    }
  return m;
}

LocalQuantumModel LocalQuantumModel::from_arcs(const Graph& g, const PermGroup& group,
                                               const std::vector<std::vector<Poly2>>& arc_weight) {
  auto cls = arc_orbits(g, group);
  if (arc_weight.size() != cls.size()) throw InputError("weight table does not match the graph");
  std::map<std::uint32_t, Poly2> seen;
  for (std::size_t x = 0; x < cls.size(); ++x) {
    if (arc_weight[x].size() != cls[x].size()) throw InputError("weight table does not match the graph");
    for (std::size_t j = 0; j < cls[x].size(); ++j) {
      auto [it, fresh] = seen.emplace(cls[x][j], arc_weight[x][j]);
      if (!fresh && !(it->second == arc_weight[x][j]))
        throw InputError("weights are not constant on directed-edge orbits of the local symmetry");
    }
  }
  LocalQuantumModel m;
  m.graph_ = g;
  m.weight_ = arc_weight;
  return m;
}

std::vector<Poly2> LocalQuantumModel::amplitudes(std::uint32_t start, std::uint32_t t) const {
  const auto n = graph_.vertex_count();
  if (start >= n) throw InputError("start vertex out of range");
  std::vector<Poly2> cur(n);
  cur[start] = Poly2::monomial(1, 0, 0);
  for (std::uint32_t step = 0; step < t; ++step) {
    std::vector<Poly2> nxt = cur;  // stay
    for (std::uint32_t x = 0; x < n; ++x) {
      if (cur[x].is_zero()) continue;
      const auto& nb = graph_.neighbors(x);
      for (std::size_t j = 0; j < nb.size(); ++j) nxt[nb[j]] = nxt[nb[j]] + cur[x] * weight_[x][j];
    }
    cur = std::move(nxt);
  }
  return cur;
}

Poly2 LocalQuantumModel::amplitude(std::uint32_t start, std::uint32_t end, std::uint32_t t) const {
  if (end >= graph_.vertex_count()) throw InputError("end vertex out of range");
  return amplitudes(start, t)[end];
}

std::vector<QuantizingHit> quantizing_pairs(const Poly2& a, std::uint32_t max_mv, std::uint32_t max_mw,
                                            const SweepOptions& opts) {
  if (a.is_zero()) throw InputError("zero amplitude vanishes everywhere");
  const std::uint64_t cells = std::uint64_t{max_mv} * max_mw;
  const unsigned w = std::max(1u, opts.workers);
  std::vector<std::vector<QuantizingHit>> part(w);
  parallel_chunks(cells, w, [&](unsigned k, std::uint64_t b, std::uint64_t e) {
    for (auto cell = b; cell < e; ++cell) {
      const auto mv = static_cast<std::uint32_t>(cell / max_mw + 1);
      const auto mw = static_cast<std::uint32_t>(cell % max_mw + 1);
      const std::uint32_t l = std::lcm(mv, mw);
      for (std::uint32_t bexp = 1; bexp <= mw; ++bexp) {
        if (std::gcd(bexp, mw) != 1) continue;
        // v = zeta_l^(l/mv), w = zeta_l^(bexp * l/mw)
        std::vector<std::int64_t> raw(l, 0);
        for (auto& [key, c] : a.terms()) {
          const std::uint64_t e_v = std::uint64_t{key.first} * (l / mv);
          const std::uint64_t e_w = std::uint64_t{key.second} * bexp * (l / mw);
          const auto idx = static_cast<std::size_t>((e_v + e_w) % l);
          raw[idx] = checked_add(raw[idx], c);
        }
        if (CycloElement::evaluate(IntPoly(raw), l).is_zero()) part[k].push_back({mv, mw, bexp % mw});
      }
    }
  });
  std::vector<QuantizingHit> out;
  for (auto& p : part) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace dds
