#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dds {

// Simple undirected graph. Each vertex keeps an ordered neighbour list; the
// order matters only for rules that are not fully symmetric.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  // Appends v to u's list and u to v's list.
  void add_edge(std::uint32_t u, std::uint32_t v);
  // Replaces a vertex's neighbour order (must be a permutation of the current list).
  void set_neighbor_order(std::uint32_t u, std::vector<std::uint32_t> order);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t u) const { return adj_[u]; }
  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  // Edges as (min, max) pairs, sorted.
  const std::set<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
  // Valence when all vertices share it, otherwise -1.
  int regular_valence() const;

  std::string name;

 private:
  std::vector<std::vector<std::uint32_t>> adj_;
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges_;
};

namespace graphs {

Graph cube();
Graph icosahedron();
// Dual of the icosahedron: one vertex per triangular face.
Graph dodecahedron();
// Truncated icosahedron (C60): one vertex per directed icosahedron edge.
Graph buckyball();
// N x N torus, vertex x + N*y; 8 neighbours in the order
// (-1,-1) (0,-1) (1,-1) (-1,0) (1,0) (-1,1) (0,1) (1,1).
Graph torus_moore(std::uint32_t n);
// N x N torus with neighbours (-1,0) (1,0) (0,-1) (0,1).
Graph torus_von_neumann(std::uint32_t n);
// Ring Z_n with neighbour order [x-1, x+1].
Graph cycle(std::uint32_t n);
Graph path(std::uint32_t n);
Graph complete(std::uint32_t n);

// "cube", "dodecahedron", "buckyball", "icosahedron", "torus_moore:N",
// "torus_vonneumann:N", "cycle:N", "path:N", "complete:N".
Graph by_name(const std::string& spec);

}  // namespace graphs

// File format: first line "n m", then m lines "u v" (0-based).
Graph read_graph(std::istream& in);

}  // namespace dds
