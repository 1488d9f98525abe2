#pragma once

#include <cstdint>

#include "dds/graph.hpp"
#include "dds/perm.hpp"

namespace dds {

std::size_t automorphism_vertex_cap();
void set_automorphism_vertex_cap(std::size_t cap);

// Stable colouring by iterated neighbour-colour multisets (1-dim WL).
std::vector<std::uint32_t> refine_colors(const Graph& g);

// Full automorphism group by backtracking over a BFS vertex order, pruned
// by refined colours and adjacency to already-mapped vertices.
PermGroup automorphisms(const Graph& g);

bool is_automorphism(const Graph& g, const Perm& p);

}  // namespace dds
