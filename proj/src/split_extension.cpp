#include "dds/split_extension.hpp"

#include "dds/errors.hpp"

namespace dds {

void SplitExtension::init_tables() {
  table_ = space_.multiplication_table();
  inv_.resize(space_.order());
  for (std::size_t i = 0; i < space_.order(); ++i)
    inv_[i] = static_cast<std::uint32_t>(space_.index_of(space_.element(i).inverse()));
  gamma_table_ = gamma_.multiplication_table();
  gamma_inv_.resize(gamma_.order());
  for (std::size_t i = 0; i < gamma_.order(); ++i)
    gamma_inv_[i] = static_cast<std::uint32_t>(gamma_.index_of(gamma_.element(i).inverse()));
}

SplitExtension::SplitExtension(PermGroup space, PermGroup gamma, int m, long long k)
    : space_(std::move(space)), gamma_(std::move(gamma)), params_(std::make_pair(m, k)) {
  if (m != 0 && m != 1) throw InputError("power-family parameter m must be 0 or 1");
  init_tables();
  mu_.resize(space_.order());
  kappa_.resize(space_.order());
  for (std::size_t i = 0; i < space_.order(); ++i) {
    const Perm& a = space_.element(i);
    mu_[i] = static_cast<std::uint32_t>(space_.index_of(a.pow(-m)));
    kappa_[i] = static_cast<std::uint32_t>(space_.index_of(a.pow(k)));
  }
}

SplitExtension::SplitExtension(PermGroup space, PermGroup gamma, std::vector<std::uint32_t> mu,
                               std::vector<std::uint32_t> kappa)
    : space_(std::move(space)), gamma_(std::move(gamma)), mu_(std::move(mu)), kappa_(std::move(kappa)) {
  if (mu_.size() != space_.order() || kappa_.size() != space_.order())
    throw InputError("mu and kappa tables must cover the space group");
  for (auto v : mu_)
    if (v >= space_.order()) throw InputError("mu table entry out of range");
  for (auto v : kappa_)
    if (v >= space_.order()) throw InputError("kappa table entry out of range");
  init_tables();
  for (std::uint32_t a = 0; a < space_.order(); ++a)
    for (std::uint32_t b = 0; b < space_.order(); ++b)
      if (mul(mu_[a], mu_[b]) != mu_[mul(b, a)]) throw InputError("mu is not an antihomomorphism");
}

WElement SplitExtension::identity() const {
  return WElement{std::vector<std::uint32_t>(points(), 0), 0};
}

WElement SplitExtension::random_element(std::mt19937_64& rng) const {
  WElement u;
  std::uniform_int_distribution<std::uint32_t> pg(0, static_cast<std::uint32_t>(gamma_.order() - 1));
  std::uniform_int_distribution<std::uint32_t> ps(0, static_cast<std::uint32_t>(space_.order() - 1));
  for (std::size_t x = 0; x < points(); ++x) u.alpha.push_back(pg(rng));
  u.a = ps(rng);
  return u;
}

std::vector<WElement> SplitExtension::all_elements() const {
  std::vector<WElement> out;
  std::vector<std::uint32_t> alpha(points(), 0);
  while (true) {
    for (std::uint32_t a = 0; a < space_.order(); ++a) out.push_back({alpha, a});
    std::size_t i = 0;
    for (; i < alpha.size(); ++i) {
      if (++alpha[i] < gamma_.order()) break;
      alpha[i] = 0;
    }
    if (i == alpha.size()) break;
  }
  return out;
}

WElement SplitExtension::multiply(const WElement& u, const WElement& v) const {
  // (alpha(x k(ab)^-1 mu(b) k(a)) beta(x k(ab)^-1 k(b)), ab)
  const std::uint32_t ab = mul(u.a, v.a);
  const std::uint32_t kab_inv = inv(kappa_[ab]);
  const std::uint32_t shift_a = mul(mul(kab_inv, mu_[v.a]), kappa_[u.a]);
  const std::uint32_t shift_b = mul(kab_inv, kappa_[v.a]);
  WElement r;
  r.a = ab;
  r.alpha.resize(points());
  for (std::uint32_t x = 0; x < points(); ++x) {
    auto ga = u.alpha[point_image(x, shift_a)];
    auto gb = v.alpha[point_image(x, shift_b)];
    r.alpha[x] = gamma_table_[ga][gb];
  }
  return r;
}

WElement SplitExtension::inverse(const WElement& u) const {
  // (alpha(x k(a^-1)^-1 mu(a)^-1 k(a))^-1, a^-1)
  const std::uint32_t a_inv = inv(u.a);
  const std::uint32_t shift = mul(mul(inv(kappa_[a_inv]), inv(mu_[u.a])), kappa_[u.a]);
  WElement r;
  r.a = a_inv;
  r.alpha.resize(points());
  for (std::uint32_t x = 0; x < points(); ++x) r.alpha[x] = gamma_inv_[u.alpha[point_image(x, shift)]];
  return r;
}

std::vector<std::uint32_t> SplitExtension::act(const std::vector<std::uint32_t>& sigma, const WElement& u) const {
  // sigma(x mu(a)) alpha(x kappa(a))
  if (sigma.size() != points()) throw InputError("state has wrong number of points");
  std::vector<std::uint32_t> out(points());
  for (std::uint32_t x = 0; x < points(); ++x) {
    auto value = sigma[point_image(x, mu_[u.a])];
    if (value >= gamma_.degree()) throw InputError("state value outside the internal group's set");
    out[x] = gamma_.element(u.alpha[point_image(x, kappa_[u.a])])[value];
  }
  return out;
}

bool SplitExtension::same_parameters(const SplitExtension& other) const {
  return mu_ == other.mu_ && kappa_ == other.kappa_ && space_.elements() == other.space_.elements() &&
         gamma_.elements() == other.gamma_.elements();
}

namespace {

void check_element(const SplitExtension& w, const WElement& u) {
  if (u.alpha.size() != w.points() || u.a >= w.space().order())
    throw InputError("element does not belong to this extension");
  for (auto g : u.alpha)
    if (g >= w.gamma().order()) throw InputError("element does not belong to this extension");
}

}  // namespace

WElement w_multiply(const SplitExtension& w, const WElement& u, const WElement& v) {
  check_element(w, u);
  check_element(w, v);
  return w.multiply(u, v);
}

WElement w_inverse(const SplitExtension& w, const WElement& u) {
  check_element(w, u);
  return w.inverse(u);
}

std::vector<std::uint32_t> w_act(const SplitExtension& w, const std::vector<std::uint32_t>& sigma,
                                 const WElement& u) {
  check_element(w, u);
  return w.act(sigma, u);
}

}  // namespace dds
