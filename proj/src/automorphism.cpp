#include "dds/automorphism.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "dds/errors.hpp"

namespace dds {

namespace {

std::atomic<std::size_t> g_vertex_cap{128};

struct Search {
  const Graph& g;
  const std::vector<std::uint32_t>& color;
  std::vector<std::uint32_t> order;   // vertices in BFS order
  std::vector<std::int64_t> parent;   // BFS parent (or -1 for a component root)
  std::vector<std::int64_t> image;
  std::vector<bool> used;
  std::vector<Perm> found;

  bool consistent(std::size_t depth, std::uint32_t w) {
    const auto v = order[depth];
    if (color[v] != color[w] || used[w]) return false;
    for (std::size_t j = 0; j < depth; ++j) {
      auto u = order[j];
      if (g.adjacent(v, u) != g.adjacent(w, static_cast<std::uint32_t>(image[u]))) return false;
    }
    return true;
  }

  void run(std::size_t depth) {
    if (depth == order.size()) {
      std::vector<std::uint32_t> img(image.begin(), image.end());
      found.emplace_back(std::move(img));
      return;
    }
    const auto v = order[depth];
    std::vector<std::uint32_t> cands;
    if (parent[v] >= 0) {
      cands = g.neighbors(static_cast<std::uint32_t>(image[parent[v]]));
    } else {
      for (std::uint32_t w = 0; w < g.vertex_count(); ++w) cands.push_back(w);
    }
    std::sort(cands.begin(), cands.end());
    for (auto w : cands) {
      if (!consistent(depth, w)) continue;
      image[v] = w;
      used[w] = true;
      run(depth + 1);
      used[w] = false;
      image[v] = -1;
    }
  }
};

}  // namespace

std::size_t automorphism_vertex_cap() { return g_vertex_cap.load(); }
void set_automorphism_vertex_cap(std::size_t cap) { g_vertex_cap.store(cap); }

std::vector<std::uint32_t> refine_colors(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::uint32_t> color(n);
  for (std::uint32_t v = 0; v < n; ++v) color[v] = static_cast<std::uint32_t>(g.neighbors(v).size());
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t> sig;
    std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> keys(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      std::vector<std::uint32_t> nc;
      for (auto w : g.neighbors(v)) nc.push_back(color[w]);
      std::sort(nc.begin(), nc.end());
      keys[v] = {color[v], std::move(nc)};
      sig.emplace(keys[v], 0);
    }
    std::uint32_t next = 0;
    for (auto& [k, id] : sig) id = next++;
    for (std::uint32_t v = 0; v < n; ++v) color[v] = sig[keys[v]];
    if (sig.size() == classes) break;
    classes = sig.size();
  }
  return color;
}

bool is_automorphism(const Graph& g, const Perm& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p[u], p[v])) return false;
  return true;
}

PermGroup automorphisms(const Graph& g) {
  const auto n = g.vertex_count();
  if (n > automorphism_vertex_cap()) throw CapExceeded("graph exceeds automorphism vertex cap");
  auto color = refine_colors(g);
  Search s{g, color, {}, std::vector<std::int64_t>(n, -1), std::vector<std::int64_t>(n, -1),
           std::vector<bool>(n, false), {}};
  std::vector<bool> seen(n, false);
  for (std::uint32_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::size_t head = s.order.size();
    s.order.push_back(root);
    while (head < s.order.size()) {
      auto v = s.order[head++];
      for (auto w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          s.parent[w] = v;
          s.order.push_back(w);
        }
    }
  }
  s.run(0);
  for (auto& p : s.found)
    if (!is_automorphism(g, p)) throw InvariantViolation("search produced a non-automorphism");
  return PermGroup::from_elements(n, std::move(s.found));
}

}  // namespace dds
