#pragma once

// Local quantum models on regular graphs: each directed edge carries a
// monomial v^a w^b, constant on orbits of the symmetry group on directed
// edges; staying put carries 1. Amplitudes are sums over walks.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dds/graph.hpp"
#include "dds/parallel.hpp"
#include "dds/perm.hpp"

namespace dds {

// Integer polynomial in two commuting symbols v, w.
class Poly2 {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;  // (power of v, power of w)

  Poly2() = default;
  static Poly2 monomial(std::int64_t c, std::uint32_t a, std::uint32_t b);

  const std::map<Key, std::int64_t>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::int64_t coeff(std::uint32_t a, std::uint32_t b) const;

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  bool operator==(const Poly2&) const = default;

  // Descending by total degree, then by power of v.
  std::string to_string() const;

 private:
  void add(Key k, std::int64_t c);
  std::map<Key, std::int64_t> t_;
};

// Orbit id of each directed edge (x, slot j of x), numbered by first
// appearance scanning x, then slots.
std::vector<std::vector<std::uint32_t>> arc_orbits(const Graph& g, const PermGroup& group);

class LocalQuantumModel {
 public:
  // One monomial per arc orbit.
  static LocalQuantumModel from_classes(const Graph& g, const PermGroup& group, const std::vector<Poly2>& class_weight);
  // Explicit weight per (vertex, slot); rejected unless constant on arc orbits.
  static LocalQuantumModel from_arcs(const Graph& g, const PermGroup& group,
                                     const std::vector<std::vector<Poly2>>& arc_weight);

  const Graph& graph() const { return graph_; }
  const Poly2& weight(std::uint32_t x, std::size_t slot) const { return weight_[x][slot]; }

  // Sum over length-t walks from start to end (stays allowed).
  Poly2 amplitude(std::uint32_t start, std::uint32_t end, std::uint32_t t) const;
  // Amplitudes from start to every vertex.
  std::vector<Poly2> amplitudes(std::uint32_t start, std::uint32_t t) const;

 private:
  Graph graph_;
  std::vector<std::vector<Poly2>> weight_;
};

struct QuantizingHit {
  std::uint32_t mv = 0, mw = 0;
  std::uint32_t b = 0;  // w = zeta_mw^b with v = zeta_mv fixed (Galois-normalized)
};

// Pairs (Mv, Mw) <= bounds such that A(v, w) = 0 for some primitive roots
// v, w of those orders, decided exactly in Z[zeta_lcm].
std::vector<QuantizingHit> quantizing_pairs(const Poly2& a, std::uint32_t max_mv, std::uint32_t max_mw,
                                            const SweepOptions& opts = {});

}  // namespace dds
