#pragma once

// Split extensions W of a space group G by Gamma-valued functions on X.
// An element is (alpha, a) with alpha: X -> Gamma and a in G. The extension
// is fixed by an antihomomorphism mu: G -> G and an arbitrary kappa: G -> G,
// either given as tables or through the power family mu(a) = a^-m, kappa(a) = a^k.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dds/perm.hpp"

namespace dds {

struct WElement {
  std::vector<std::uint32_t> alpha;  // per point: index into gamma.elements()
  std::uint32_t a = 0;               // index into space.elements()

  bool operator==(const WElement&) const = default;
};

class SplitExtension {
 public:
  // Power family; m must be 0 or 1.
  SplitExtension(PermGroup space, PermGroup gamma, int m, long long k);
  // Explicit tables over element indices of the space group.
  SplitExtension(PermGroup space, PermGroup gamma, std::vector<std::uint32_t> mu,
                 std::vector<std::uint32_t> kappa);

  const PermGroup& space() const { return space_; }
  const PermGroup& gamma() const { return gamma_; }
  std::size_t points() const { return space_.degree(); }
  std::optional<std::pair<int, long long>> power_parameters() const { return params_; }
  std::uint32_t mu(std::uint32_t a) const { return mu_[a]; }
  std::uint32_t kappa(std::uint32_t a) const { return kappa_[a]; }

  WElement identity() const;
  WElement random_element(std::mt19937_64& rng) const;
  // Every element (|Gamma|^|X| * |G| of them); intended for small cases.
  std::vector<WElement> all_elements() const;

  WElement multiply(const WElement& u, const WElement& v) const;
  WElement inverse(const WElement& u) const;
  // Right action on a state (one value in {0..q-1} per point).
  std::vector<std::uint32_t> act(const std::vector<std::uint32_t>& sigma, const WElement& u) const;

  bool same_parameters(const SplitExtension& other) const;

 private:
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a][b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t point_image(std::uint32_t x, std::uint32_t a) const { return space_.element(a)[x]; }
  void init_tables();

  PermGroup space_;
  PermGroup gamma_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::vector<std::uint32_t>> gamma_table_;
  std::vector<std::uint32_t> gamma_inv_;
  std::vector<std::uint32_t> mu_, kappa_;
  std::optional<std::pair<int, long long>> params_;
};

// Free functions, checking that both operands come from the same extension.
WElement w_multiply(const SplitExtension& w, const WElement& u, const WElement& v);
WElement w_inverse(const SplitExtension& w, const WElement& u);
std::vector<std::uint32_t> w_act(const SplitExtension& w, const std::vector<std::uint32_t>& sigma,
                                 const WElement& u);

}  // namespace dds
