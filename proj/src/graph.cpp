#include "dds/graph.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>

#include "dds/errors.hpp"

namespace dds {

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= adj_.size() || v >= adj_.size()) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self loops are not allowed");
  auto e = std::minmax(u, v);
  if (!edges_.insert({e.first, e.second}).second) throw InputError("duplicate edge");
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

void Graph::set_neighbor_order(std::uint32_t u, std::vector<std::uint32_t> order) {
  auto a = adj_.at(u), b = order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw InputError("neighbour order is not a permutation of the neighbours");
  adj_[u] = std::move(order);
}

bool Graph::adjacent(std::uint32_t u, std::uint32_t v) const {
  auto e = std::minmax(u, v);
  return edges_.count({e.first, e.second}) > 0;
}

int Graph::regular_valence() const {
  if (adj_.empty()) return 0;
  const auto k = adj_[0].size();
  for (auto& a : adj_)
    if (a.size() != k) return -1;
  return static_cast<int>(k);
}

namespace graphs {

Graph cube() {
  Graph g(8);
  g.name = "cube";
  for (std::uint32_t v = 0; v < 8; ++v)
    for (std::uint32_t b = 0; b < 3; ++b) {
      std::uint32_t w = v ^ (1u << b);
      if (v < w) g.add_edge(v, w);
    }
  for (std::uint32_t v = 0; v < 8; ++v) g.set_neighbor_order(v, {v ^ 1u, v ^ 2u, v ^ 4u});
  return g;
}

Graph icosahedron() {
  // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom
  Graph g(12);
  g.name = "icosahedron";
  for (std::uint32_t i = 0; i < 5; ++i) {
    std::uint32_t u = 1 + i, un = 1 + (i + 1) % 5;
    std::uint32_t l = 6 + i, ln = 6 + (i + 1) % 5;
    g.add_edge(0, u);
    g.add_edge(u, un);
    g.add_edge(u, l);
    g.add_edge(u, ln);
    g.add_edge(l, ln);
    g.add_edge(l, 11);
  }
  return g;
}

namespace {

std::vector<std::array<std::uint32_t, 3>> triangles(const Graph& g) {
  std::vector<std::array<std::uint32_t, 3>> t;
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      if (g.adjacent(a, b))
        for (std::uint32_t c = b + 1; c < n; ++c)
          if (g.adjacent(a, c) && g.adjacent(b, c)) t.push_back({a, b, c});
  return t;
}

}  // namespace

Graph dodecahedron() {
  auto ico = icosahedron();
  auto faces = triangles(ico);
  Graph g(faces.size());
  g.name = "dodecahedron";
  for (std::uint32_t i = 0; i < faces.size(); ++i)
    for (std::uint32_t j = i + 1; j < faces.size(); ++j) {
      int shared = 0;
      for (auto x : faces[i])
        for (auto y : faces[j]) shared += x == y;
      if (shared == 2) g.add_edge(i, j);
    }
  return g;
}

Graph buckyball() {
  auto ico = icosahedron();
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> id;
  for (auto [u, v] : ico.edges()) {
    id.emplace(std::make_pair(u, v), static_cast<std::uint32_t>(id.size()));
    id.emplace(std::make_pair(v, u), static_cast<std::uint32_t>(id.size()));
  }
  Graph g(id.size());
  g.name = "buckyball";
  for (auto& [e, x] : id) {
    auto [u, v] = e;
    // hexagon-hexagon edge: the same icosahedron edge seen from the other end
    auto y = id.at({v, u});
    if (x < y) g.add_edge(x, y);
    // pentagon edges: around u, directions to mutually adjacent neighbours
    for (auto w : ico.neighbors(u)) {
      if (w == v || !ico.adjacent(v, w)) continue;
      auto z = id.at({u, w});
      if (x < z) g.add_edge(x, z);
    }
  }
  // neighbour order: the two pentagon neighbours first, then the hexagon one
  for (auto& [e, x] : id) {
    auto [u, v] = e;
    std::vector<std::uint32_t> pent;
    for (auto w : ico.neighbors(u))
      if (w != v && ico.adjacent(v, w)) pent.push_back(id.at({u, w}));
    std::sort(pent.begin(), pent.end());
    pent.push_back(id.at({v, u}));
    g.set_neighbor_order(x, pent);
  }
  return g;
}

Graph torus_moore(std::uint32_t n) {
  if (n < 3) throw InputError("torus side must be at least 3");
  Graph g(n * n);
  g.name = "torus_moore:" + std::to_string(n);
  auto at = [n](std::int64_t x, std::int64_t y) {
    return static_cast<std::uint32_t>(((x % n + n) % n) + n * ((y % n + n) % n));
  };
  static const int dx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
  static const int dy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
  for (std::uint32_t y = 0; y < n; ++y)
    for (std::uint32_t x = 0; x < n; ++x)
      for (int d = 0; d < 8; ++d) {
        auto v = at(x, y), w = at(std::int64_t{x} + dx[d], std::int64_t{y} + dy[d]);
        if (v < w && !g.adjacent(v, w)) g.add_edge(v, w);
      }
  for (std::uint32_t y = 0; y < n; ++y)
    for (std::uint32_t x = 0; x < n; ++x) {
      std::vector<std::uint32_t> order;
      for (int d = 0; d < 8; ++d) order.push_back(at(std::int64_t{x} + dx[d], std::int64_t{y} + dy[d]));
      g.set_neighbor_order(at(x, y), order);
    }
  return g;
}

Graph torus_von_neumann(std::uint32_t n) {
  if (n < 3) throw InputError("torus side must be at least 3");
  Graph g(n * n);
  g.name = "torus_vonneumann:" + std::to_string(n);
  auto at = [n](std::int64_t x, std::int64_t y) {
    return static_cast<std::uint32_t>(((x % n + n) % n) + n * ((y % n + n) % n));
  };
  for (std::uint32_t y = 0; y < n; ++y)
    for (std::uint32_t x = 0; x < n; ++x) {
      g.add_edge(at(x, y), at(std::int64_t{x} + 1, y));
      g.add_edge(at(x, y), at(x, std::int64_t{y} + 1));
    }
  for (std::uint32_t y = 0; y < n; ++y)
    for (std::uint32_t x = 0; x < n; ++x)
      g.set_neighbor_order(at(x, y), {at(std::int64_t{x} - 1, y), at(std::int64_t{x} + 1, y),
                                      at(x, std::int64_t{y} - 1), at(x, std::int64_t{y} + 1)});
  return g;
}

Graph cycle(std::uint32_t n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  Graph g(n);
  g.name = "cycle:" + std::to_string(n);
  for (std::uint32_t x = 0; x < n; ++x) g.add_edge(x, (x + 1) % n);
  for (std::uint32_t x = 0; x < n; ++x) g.set_neighbor_order(x, {(x + n - 1) % n, (x + 1) % n});
  return g;
}

Graph path(std::uint32_t n) {
  Graph g(n);
  g.name = "path:" + std::to_string(n);
  for (std::uint32_t x = 0; x + 1 < n; ++x) g.add_edge(x, x + 1);
  return g;
}

Graph complete(std::uint32_t n) {
  Graph g(n);
  g.name = "complete:" + std::to_string(n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph by_name(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::uint32_t n = 0;
  if (colon != std::string::npos) {
    try {
      n = static_cast<std::uint32_t>(std::stoul(spec.substr(colon + 1)));
    } catch (const std::exception&) {
      throw InputError("bad graph size in '" + spec + "'");
    }
  }
  if (kind == "cube") return cube();
  if (kind == "icosahedron") return icosahedron();
  if (kind == "dodecahedron") return dodecahedron();
  if (kind == "buckyball") return buckyball();
  if (colon == std::string::npos) throw InputError("unknown graph '" + spec + "'");
  if (kind == "torus_moore") return torus_moore(n);
  if (kind == "torus_vonneumann") return torus_von_neumann(n);
  if (kind == "cycle") return cycle(n);
  if (kind == "path") return path(n);
  if (kind == "complete") return complete(n);
  throw InputError("unknown graph '" + spec + "'");
}

}  // namespace graphs

Graph read_graph(std::istream& in) {
  long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw InputError("graph file must start with 'n m'");
  Graph g(static_cast<std::size_t>(n));
  for (long i = 0; i < m; ++i) {
    long u, v;
    if (!(in >> u >> v)) throw InputError("graph file ended early");
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range");
    g.add_edge(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
  }
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
    auto nb = g.neighbors(u);
    std::sort(nb.begin(), nb.end());
    g.set_neighbor_order(u, nb);
  }
  g.name = "file";
  return g;
}

}  // namespace dds
