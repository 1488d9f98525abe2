#include "dds/perm.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "dds/errors.hpp"

namespace dds {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> hit(img_.size(), false);
  for (auto x : img_) {
    if (x >= img_.size() || hit[x]) throw InputError("images do not form a permutation");
    hit[x] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  return Perm(std::move(v));
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  for (auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n) throw InputError("cycle point out of range");
      v[c[i]] = c[(i + 1) % c.size()];
    }
  return Perm(std::move(v));
}

Perm Perm::operator*(const Perm& h) const {
  if (h.degree() != degree()) throw InputError("permutation degrees differ");
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) r.img_[x] = h.img_[img_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = static_cast<std::uint32_t>(x);
  return r;
}

Perm Perm::pow(long long e) const {
  Perm base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Perm r = identity(degree());
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

std::string Perm::cycle_string() const {
  std::string s;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    s += "(";
    for (std::size_t y = x; !seen[y]; y = img_[y]) {
      if (s.back() != '(') s += ",";
      s += std::to_string(y);
      seen[y] = true;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

// ---- PermGroup ----

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::size_t element_cap)
    : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw InputError("generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(g);
  }
  std::unordered_set<Perm, PermHash> seen;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  std::vector<Perm> frontier{id};
  elements_.push_back(id);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto& e : frontier)
      for (auto& g : generators_) {
        Perm p = e * g;
        if (seen.insert(p).second) {
          if (seen.size() > element_cap) throw CapExceeded("group order exceeds element cap");
          elements_.push_back(p);
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  std::sort(elements_.begin(), elements_.end());
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements) {
  PermGroup g;
  g.degree_ = degree;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements[0].is_identity()) throw InvariantViolation("element list lacks the identity");
  g.elements_ = std::move(elements);
  g.generators_ = generating_set(degree, g.elements_);
  return g;
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    gens.push_back(Perm::from_cycles(degree, {{0, 1}}));
    std::vector<std::uint32_t> all(degree);
    std::iota(all.begin(), all.end(), 0u);
    gens.push_back(Perm::from_cycles(degree, {all}));
  }
  return PermGroup(degree, gens);
}

PermGroup PermGroup::cyclic(std::size_t degree) {
  std::vector<std::uint32_t> all(degree);
  std::iota(all.begin(), all.end(), 0u);
  return PermGroup(degree, {Perm::from_cycles(degree, {all})});
}

bool PermGroup::contains(const Perm& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::size_t PermGroup::index_of(const Perm& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || !(*it == g)) throw InvariantViolation("element not in group");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::vector<std::uint32_t>> PermGroup::multiplication_table() const {
  std::vector<std::vector<std::uint32_t>> t(order(), std::vector<std::uint32_t>(order()));
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = 0; j < order(); ++j)
      t[i][j] = static_cast<std::uint32_t>(index_of(elements_[i] * elements_[j]));
  return t;
}

bool PermGroup::is_closed() const {
  for (auto& a : elements_) {
    if (!contains(a.inverse())) return false;
    for (auto& b : elements_)
      if (!contains(a * b)) return false;
  }
  return true;
}

std::vector<std::uint32_t> orbit(const PermGroup& g, std::uint32_t point) {
  auto s = orbit(g, point, [](std::uint32_t x, const Perm& p) { return p[x]; });
  return {s.begin(), s.end()};
}

PermGroup subgroup_where(const PermGroup& g, const std::function<bool(const Perm&)>& pred) {
  std::vector<Perm> keep;
  for (auto& e : g.elements())
    if (pred(e)) keep.push_back(e);
  return PermGroup::from_elements(g.degree(), std::move(keep));
}

PermGroup stabilizer(const PermGroup& g, std::uint32_t point) {
  if (point >= g.degree()) throw InputError("point out of range");
  return subgroup_where(g, [point](const Perm& p) { return p[point] == point; });
}

std::vector<std::vector<std::uint32_t>> conjugacy_classes(const PermGroup& g) {
  std::vector<int> cls(g.order(), -1);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (cls[i] >= 0) continue;
    std::vector<std::uint32_t> members;
    for (auto& h : g.elements()) {
      auto j = g.index_of(h.inverse() * g.element(i) * h);
      if (cls[j] < 0) {
        cls[j] = static_cast<int>(out.size());
        members.push_back(static_cast<std::uint32_t>(j));
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<Perm> generating_set(std::size_t degree, const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  std::set<Perm> span{Perm::identity(degree)};
  for (auto& e : elements) {
    if (span.count(e)) continue;
    gens.push_back(e);
    // re-close: multiply the current span by all generators until stable
    std::vector<Perm> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (auto& x : frontier)
        for (auto& gen : gens) {
          Perm p = x * gen;
          if (span.insert(p).second) next.push_back(std::move(p));
        }
      frontier = std::move(next);
    }
    if (span.size() == elements.size()) break;
  }
  return gens;
}

}  // namespace dds
