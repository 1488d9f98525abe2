#include "dds/relation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <numeric>

#include "dds/errors.hpp"

namespace dds {

namespace {

std::atomic<std::uint64_t> g_bit_cap{std::uint64_t{1} << 30};

std::size_t word_count(std::uint64_t bits) { return static_cast<std::size_t>((bits + 63) / 64); }

void require_same_domain(const Relation& a, const Relation& b) {
  if (!(a.domain() == b.domain()))
    throw InputError("relations live on different ordered domains");
}

// For each position of `outer`, the stride of the matching point in `inner`
// (0 when the point is absent from `inner`).
std::vector<std::uint64_t> strides_into(const Domain& outer, const Domain& inner) {
  std::vector<std::uint64_t> inner_stride(inner.size());
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    inner_stride[i] = s;
    s *= inner.radix(i);
  }
  std::vector<std::uint64_t> out(outer.size(), 0);
  for (std::size_t j = 0; j < outer.size(); ++j) {
    if (auto pos = inner.position_of(outer.point(j).id)) out[j] = inner_stride[*pos];
  }
  return out;
}

// Walk every index of `outer` in order, calling f(outer_index, inner_index).
template <class F>
void odometer(const Domain& outer, const std::vector<std::uint64_t>& stride, F&& f) {
  const std::uint64_t n = outer.volume();
  const std::size_t k = outer.size();
  std::vector<std::uint32_t> digit(k, 0);
  std::uint64_t inner = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    f(i, inner);
    for (std::size_t j = 0; j < k; ++j) {
      if (++digit[j] < outer.radix(j)) {
        inner += stride[j];
        break;
      }
      inner -= stride[j] * (outer.radix(j) - 1);
      digit[j] = 0;
    }
  }
}

}  // namespace

std::uint64_t relation_bit_cap() { return g_bit_cap.load(); }
void set_relation_bit_cap(std::uint64_t cap) { g_bit_cap.store(cap); }

// ---- Domain ----

Domain::Domain(std::vector<Point> points, std::vector<std::uint32_t> radices)
    : points_(std::move(points)) {
  if (radices.size() == 1 && points_.size() != 1) {
    radices_.assign(points_.size(), radices[0]);
  } else if (radices.size() == points_.size()) {
    radices_ = std::move(radices);
  } else {
    throw InputError("radix list does not match point list");
  }
  for (auto q : radices_)
    if (q < 2) throw InputError("radix must be at least 2");
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i].id == points_[j].id) throw InputError("duplicate point id in domain");
}

Domain Domain::from_labels(const std::vector<std::string>& labels, std::uint32_t q) {
  std::vector<Point> pts;
  pts.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    pts.push_back({static_cast<std::uint32_t>(i), labels[i]});
  return Domain(std::move(pts), std::vector<std::uint32_t>(labels.size(), q));
}

bool Domain::uniform() const {
  return std::adjacent_find(radices_.begin(), radices_.end(), std::not_equal_to<>()) ==
         radices_.end();
}

std::uint64_t Domain::volume() const {
  const std::uint64_t cap = relation_bit_cap();
  std::uint64_t v = 1;
  for (auto q : radices_) {
    if (v > cap / q) throw CapExceeded("relation size exceeds bit cap");
    v *= q;
  }
  if (v > cap) throw CapExceeded("relation size exceeds bit cap");
  return v;
}

std::optional<std::size_t> Domain::position_of(std::uint32_t id) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].id == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> Domain::position_of(std::string_view label) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].label == label) return i;
  return std::nullopt;
}

bool Domain::contains(const Domain& other) const {
  for (std::size_t j = 0; j < other.size(); ++j) {
    auto pos = position_of(other.point(j).id);
    if (!pos || radices_[*pos] != other.radix(j)) return false;
  }
  return true;
}

bool Domain::same_points(const Domain& other) const {
  return size() == other.size() && contains(other);
}

Domain Domain::without(std::size_t pos) const {
  std::vector<Point> pts;
  std::vector<std::uint32_t> rs;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i == pos) continue;
    pts.push_back(points_[i]);
    rs.push_back(radices_[i]);
  }
  Domain d;
  d.points_ = std::move(pts);
  d.radices_ = std::move(rs);
  return d;
}

Domain Domain::select(std::span<const std::size_t> positions) const {
  std::vector<Point> pts;
  std::vector<std::uint32_t> rs;
  for (auto p : positions) {
    if (p >= points_.size()) throw InputError("position out of range");
    pts.push_back(points_[p]);
    rs.push_back(radices_[p]);
  }
  return Domain(std::move(pts), std::move(rs));
}

Domain Domain::union_with(const Domain& other) const {
  Domain d = *this;
  for (std::size_t j = 0; j < other.size(); ++j) {
    auto pos = position_of(other.point(j).id);
    if (pos) {
      if (radices_[*pos] != other.radix(j)) throw InputError("radix conflict for shared point");
      continue;
    }
    d.points_.push_back(other.point(j));
    d.radices_.push_back(other.radix(j));
  }
  return d;
}

std::vector<std::uint32_t> Domain::id_set() const {
  std::vector<std::uint32_t> ids;
  for (auto& p : points_) ids.push_back(p.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::string> Domain::labels() const {
  std::vector<std::string> out;
  for (auto& p : points_) out.push_back(p.label);
  return out;
}

std::uint64_t index_of(std::span<const std::uint32_t> tuple, const Domain& domain) {
  if (tuple.size() != domain.size()) throw InputError("tuple length does not match domain");
  std::uint64_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= domain.radix(i)) throw InputError("tuple value out of radix range");
    idx += tuple[i] * stride;
    stride *= domain.radix(i);
  }
  return idx;
}

std::vector<std::uint32_t> tuple_of(std::uint64_t index, const Domain& domain) {
  std::vector<std::uint32_t> t(domain.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = static_cast<std::uint32_t>(index % domain.radix(i));
    index /= domain.radix(i);
  }
  if (index != 0) throw InputError("index out of range for domain");
  return t;
}

// ---- Relation ----

Relation::Relation(Domain domain, bool fill) : domain_(std::move(domain)) {
  volume_ = domain_.volume();
  words_.assign(word_count(volume_), fill ? ~std::uint64_t{0} : 0);
  clear_tail();
}

void Relation::clear_tail() {
  if (volume_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (volume_ % 64)) - 1;
}

Relation Relation::empty(Domain domain) { return Relation(std::move(domain), false); }
Relation Relation::trivial(Domain domain) { return Relation(std::move(domain), true); }

Relation Relation::from_bits(Domain domain, std::string_view bits) {
  Relation r(std::move(domain), false);
  if (bits.size() != r.volume_) throw InputError("bit table length does not match domain volume");
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      r.set(i);
    else if (bits[i] != '0')
      throw InputError("bit table must contain only 0 and 1");
  }
  return r;
}

Relation Relation::from_indices(Domain domain, std::span<const std::uint64_t> members) {
  Relation r(std::move(domain), false);
  for (auto m : members) {
    if (m >= r.volume_) throw InputError("member index out of range");
    r.set(m);
  }
  return r;
}

std::uint64_t Relation::count() const {
  std::uint64_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool Relation::is_empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool Relation::is_trivial() const { return count() == volume_; }

std::string Relation::bit_string() const {
  std::string s(volume_, '0');
  for (std::uint64_t i = 0; i < volume_; ++i)
    if (contains(i)) s[i] = '1';
  return s;
}

std::string Relation::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (std::size_t w = words_.size(); w-- > 0;)
    for (int nib = 15; nib >= 0; --nib) s.push_back(digits[(words_[w] >> (4 * nib)) & 0xf]);
  auto nz = s.find_first_not_of('0');
  return nz == std::string::npos ? "0" : s.substr(nz);
}

Relation Relation::operator&(const Relation& other) const {
  require_same_domain(*this, other);
  Relation r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
  return r;
}

Relation Relation::operator|(const Relation& other) const {
  require_same_domain(*this, other);
  Relation r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= other.words_[i];
  return r;
}

Relation Relation::complement() const {
  Relation r = *this;
  for (auto& w : r.words_) w = ~w;
  r.clear_tail();
  return r;
}

bool Relation::subset_of(const Relation& other) const {
  require_same_domain(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

// ---- core operations ----

Relation extend(const Relation& r, const Domain& superset) {
  if (!superset.contains(r.domain())) throw InputError("superset does not contain the relation domain");
  if (superset == r.domain()) return r;
  auto stride = strides_into(superset, r.domain());
  RelationBuilder b(superset);
  odometer(superset, stride, [&](std::uint64_t i, std::uint64_t src) {
    if (r.contains(src)) b.set(i);
  });
  return std::move(b).build();
}

Relation project(const Relation& r, const Domain& sub) {
  const Domain& d = r.domain();
  if (sub.empty() || sub.size() >= d.size() || !d.contains(sub))
    throw InputError("projection target must be a proper non-empty subset of the domain");
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < sub.size(); ++j) keep.push_back(*d.position_of(sub.point(j).id));
  std::sort(keep.begin(), keep.end());
  Domain target = d.select(keep);
  auto stride = strides_into(d, target);
  RelationBuilder b(target);
  odometer(d, stride, [&](std::uint64_t i, std::uint64_t dst) {
    if (r.contains(i)) b.set(dst);
  });
  return std::move(b).build();
}

bool is_consequence(const Relation& r, const Relation& q) {
  if (!r.domain().contains(q.domain())) throw InputError("consequence domain is not a subset");
  auto stride = strides_into(r.domain(), q.domain());
  bool ok = true;
  odometer(r.domain(), stride, [&](std::uint64_t i, std::uint64_t src) {
    if (ok && r.contains(i) && !q.contains(src)) ok = false;
  });
  return ok;
}

bool is_functional(const Relation& r, std::size_t position) {
  const Domain& d = r.domain();
  if (position >= d.size()) throw InputError("position out of range");
  std::uint64_t stride = 1;
  for (std::size_t i = 0; i < position; ++i) stride *= d.radix(i);
  const std::uint64_t q = d.radix(position);
  const std::uint64_t block = stride * q;
  for (std::uint64_t base = 0; base < r.volume(); base += block) {
    for (std::uint64_t low = 0; low < stride; ++low) {
      int hits = 0;
      for (std::uint64_t v = 0; v < q; ++v)
        if (r.contains(base + low + v * stride)) ++hits;
      if (hits > 1) return false;
    }
  }
  return true;
}

Relation base_relation(std::span<const Relation> system) {
  if (system.empty()) throw InputError("base relation of an empty system");
  Domain u = system[0].domain();
  for (std::size_t i = 1; i < system.size(); ++i) u = u.union_with(system[i].domain());
  Relation acc = Relation::trivial(u);
  for (auto& r : system) acc = acc & extend(r, u);
  return acc;
}

std::vector<Relation> proper_consequences(const Relation& r) {
  std::vector<Relation> out;
  const Domain& d = r.domain();
  if (d.size() < 2) return out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Relation c = project(r, d.without(i));
    if (!c.is_trivial()) out.push_back(std::move(c));
  }
  return out;
}

bool is_prime(const Relation& r) { return proper_consequences(r).empty(); }

Relation principal_factor(const Relation& r, std::span<const Relation> consequences) {
  Relation meet = Relation::trivial(r.domain());
  for (auto& c : consequences) meet = meet & extend(c, r.domain());
  return r | meet.complement();
}

Relation principal_factor(const Relation& r) {
  auto cs = proper_consequences(r);
  return principal_factor(r, cs);
}

bool is_reducible(const Relation& r) {
  if (r.is_trivial()) return true;
  if (r.is_empty()) return false;
  return principal_factor(r).is_trivial();
}

namespace {

using Memo = std::map<std::vector<std::uint32_t>, std::shared_ptr<const Decomposition>>;

std::shared_ptr<const Decomposition> decompose_node(const Relation& r, Memo& memo) {
  auto key = r.domain().id_set();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  auto node = std::make_shared<Decomposition>();
  node->source = r;
  node->consequences = proper_consequences(r);
  node->principal_factor = principal_factor(r, node->consequences);
  node->prime = node->consequences.empty();
  node->reducible = is_reducible(r);
  for (auto& c : node->consequences) {
    if (is_prime(c))
      node->children.push_back(nullptr);
    else
      node->children.push_back(decompose_node(c, memo));
  }
  memo.emplace(std::move(key), node);
  return node;
}

}  // namespace

std::shared_ptr<const Decomposition> canonical_decompose(const Relation& r) {
  Memo memo;
  return decompose_node(r, memo);
}

bool reconstructs(const Decomposition& node) {
  Relation acc = node.principal_factor;
  for (auto& c : node.consequences) acc = acc & extend(c, node.source.domain());
  if (!(acc == node.source)) return false;
  for (auto& ch : node.children)
    if (ch && !reconstructs(*ch)) return false;
  return true;
}

namespace {

void collect_components(const Relation& r, std::map<std::vector<std::uint32_t>, Relation>& seen) {
  if (r.is_trivial()) return;
  auto key = r.domain().id_set();
  if (seen.count(key)) return;
  if (!is_reducible(r)) {
    seen.emplace(std::move(key), r);
    return;
  }
  seen.emplace(std::move(key), Relation());
  for (auto& c : proper_consequences(r)) collect_components(c, seen);
}

}  // namespace

std::vector<Relation> irreducible_components(const Relation& r) {
  std::map<std::vector<std::uint32_t>, Relation> seen;
  collect_components(r, seen);
  std::vector<Relation> out;
  for (auto& [k, rel] : seen)
    if (!rel.domain().empty()) out.push_back(rel);
  return out;
}

std::vector<std::vector<std::uint32_t>> SimplicialComplex::connected_components() const {
  std::vector<std::uint32_t> ids;
  for (auto& p : points) ids.push_back(p.id);
  std::sort(ids.begin(), ids.end());
  std::vector<std::size_t> parent(ids.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto slot = [&](std::uint32_t id) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  for (auto& s : maximal_simplices) {
    for (std::size_t i = 1; i < s.size(); ++i) {
      auto a = find(slot(s.point(0).id)), b = find(slot(s.point(i).id));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::uint32_t>> groups;
  for (std::size_t i = 0; i < ids.size(); ++i) groups[find(i)].push_back(ids[i]);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

SimplicialComplex complex_of(std::span<const Relation> relations) {
  SimplicialComplex k;
  std::map<std::uint32_t, Point> points;
  std::vector<Domain> doms;
  for (auto& r : relations) {
    for (auto& p : r.domain().points()) points.emplace(p.id, p);
    for (auto& c : irreducible_components(r)) doms.push_back(c.domain());
  }
  // a point whose relations are all trivial still belongs to the complex
  std::map<std::uint32_t, bool> covered;
  for (auto& d : doms)
    for (auto& p : d.points()) covered[p.id] = true;
  for (auto& r : relations)
    for (std::size_t i = 0; i < r.domain().size(); ++i)
      if (!covered[r.domain().point(i).id]) {
        doms.push_back(r.domain().select(std::vector<std::size_t>{i}));
        covered[r.domain().point(i).id] = true;
      }
  auto inside = [](const Domain& a, const Domain& b) {
    auto x = a.id_set(), y = b.id_set();
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  std::vector<std::vector<std::uint32_t>> kept_keys;
  for (std::size_t i = 0; i < doms.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < doms.size() && maximal; ++j) {
      if (i == j) continue;
      bool sub = inside(doms[i], doms[j]);
      if (sub && (doms[i].size() < doms[j].size() || j < i)) maximal = false;
    }
    if (maximal) k.maximal_simplices.push_back(doms[i]);
  }
  std::sort(k.maximal_simplices.begin(), k.maximal_simplices.end(),
            [](const Domain& a, const Domain& b) { return a.id_set() < b.id_set(); });
  for (auto& [id, p] : points) k.points.push_back(p);
  return k;
}

}  // namespace dds
