#include "dds/local_rule.hpp"

#include <algorithm>
#include <cctype>

#include "dds/errors.hpp"

namespace dds {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

LocalRule LocalRule::from_function(std::uint32_t k, std::uint32_t q, std::vector<std::vector<std::uint32_t>> classes,
                                   const Fn& f) {
  if (q < 2) throw InputError("rule radix must be at least 2");
  LocalRule r;
  r.k_ = k;
  r.q_ = q;
  std::vector<int> seen(k, 0);
  for (auto& c : classes)
    for (auto s : c) {
      if (s >= k || seen[s]++) throw InputError("neighbour classes must partition the slots");
    }
  if (std::count(seen.begin(), seen.end(), 0)) throw InputError("neighbour classes must partition the slots");
  r.classes_ = std::move(classes);
  for (auto& c : r.classes_) {
    const auto s = static_cast<std::uint32_t>(c.size());
    // raw code: counts of values 1..q-1, each in 0..s, mixed radix s+1
    const std::uint64_t raw_size = ipow(s + 1, q - 1);
    std::vector<std::uint32_t> rank(raw_size, UINT32_MAX);
    std::uint32_t next = 0;
    for (std::uint64_t raw = 0; raw < raw_size; ++raw) {
      std::uint64_t t = raw, total = 0;
      for (std::uint32_t v = 1; v < q; ++v) {
        total += t % (s + 1);
        t /= s + 1;
      }
      if (total <= s) rank[raw] = next++;
    }
    r.class_rank_.push_back(std::move(rank));
    r.class_radix_.push_back(next);
  }
  std::uint64_t size = q;
  for (auto m : r.class_radix_) size *= m;
  constexpr std::uint32_t unset = UINT32_MAX;
  r.table_.assign(size, unset);

  const std::uint64_t tuples = ipow(q, k);
  std::vector<std::uint32_t> nb(k, 0);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    for (std::uint32_t c = 0; c < q; ++c) {
      auto v = f(c, nb);
      if (v >= q) throw InputError("rule produced a value outside the state set");
      auto& slot = r.table_[r.key(c, nb)];
      if (slot != unset && slot != v) throw InputError("rule is not invariant within its neighbour classes");
      slot = v;
    }
    for (std::uint32_t j = 0; j < k; ++j) {
      if (++nb[j] < q) break;
      nb[j] = 0;
    }
  }
  r.build_count_table();
  return r;
}

void LocalRule::build_count_table() {
  count_table_.clear();
  if (q_ != 2 || !is_symmetric()) return;
  count_table_.resize(2 * (k_ + 1));
  for (std::uint32_t c = 0; c < 2; ++c)
    for (std::uint32_t n = 0; n <= k_; ++n) {
      std::vector<std::uint32_t> nb(k_, 0);
      for (std::uint32_t j = 0; j < n; ++j) nb[j] = 1;
      count_table_[c * (k_ + 1) + n] = next(c, nb);
    }
}

LocalRule LocalRule::symmetric(std::uint32_t k, std::uint32_t q, const Fn& f) {
  std::vector<std::vector<std::uint32_t>> classes;
  if (k > 0) {
    classes.emplace_back();
    for (std::uint32_t s = 0; s < k; ++s) classes[0].push_back(s);
  }
  return from_function(k, q, std::move(classes), f);
}

LocalRule LocalRule::from_bs(const std::set<std::uint32_t>& birth, const std::set<std::uint32_t>& survival,
                             std::uint32_t k) {
  for (auto b : birth)
    if (b > k) throw InputError("birth count exceeds valence");
  for (auto s : survival)
    if (s > k) throw InputError("survival count exceeds valence");
  return symmetric(k, 2, [&](std::uint32_t c, std::span<const std::uint32_t> nb) -> std::uint32_t {
    std::uint32_t n = 0;
    for (auto v : nb) n += v;
    return c ? survival.count(n) > 0 : birth.count(n) > 0;
  });
}

LocalRule LocalRule::from_bs_string(const std::string& text, std::uint32_t k) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw InputError("expected B.../S... rule text");
  auto part = [&](std::string s, char tag) {
    if (s.empty() || std::toupper(static_cast<unsigned char>(s[0])) != tag)
      throw InputError("expected B.../S... rule text");
    std::set<std::uint32_t> out;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw InputError("bad digit in rule text");
      out.insert(static_cast<std::uint32_t>(s[i] - '0'));
    }
    return out;
  };
  return from_bs(part(text.substr(0, slash), 'B'), part(text.substr(slash + 1), 'S'), k);
}

LocalRule LocalRule::from_symmetric_number(std::uint64_t n, std::uint32_t k) {
  if (2 * (k + 1) < 64 && n >= (std::uint64_t{1} << (2 * (k + 1)))) throw InputError("rule number too large");
  return symmetric(k, 2, [&](std::uint32_t c, std::span<const std::uint32_t> nb) -> std::uint32_t {
    std::uint32_t cnt = 0;
    for (auto v : nb) cnt += v;
    return (n >> (2 * cnt + c)) & 1u;
  });
}

LocalRule LocalRule::from_wolfram(std::uint32_t n) {
  if (n > 255) throw InputError("elementary rule number must be below 256");
  return from_function(2, 2, {{0}, {1}}, [n](std::uint32_t c, std::span<const std::uint32_t> nb) {
    return (n >> (4 * nb[0] + 2 * c + nb[1])) & 1u;
  });
}

LocalRule LocalRule::identity(std::uint32_t k, std::uint32_t q) {
  return symmetric(k, q, [](std::uint32_t c, std::span<const std::uint32_t>) { return c; });
}

std::uint64_t LocalRule::key(std::uint32_t centre, std::span<const std::uint32_t> neighbors) const {
  std::uint64_t code = centre, mult = q_;
  std::vector<std::uint32_t> counts(q_);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    std::fill(counts.begin(), counts.end(), 0);
    for (auto s : classes_[c]) ++counts[neighbors[s]];
    const std::uint64_t base = classes_[c].size() + 1;
    std::uint64_t raw = 0, p = 1;
    for (std::uint32_t v = 1; v < q_; ++v) {
      raw += counts[v] * p;
      p *= base;
    }
    code += class_rank_[c][raw] * mult;
    mult *= class_radix_[c];
  }
  return code;
}

std::uint32_t LocalRule::next(std::uint32_t centre, std::span<const std::uint32_t> neighbors) const {
  if (neighbors.size() != k_) throw InputError("neighbour count does not match rule valence");
  if (centre >= q_) throw InputError("state value out of range");
  for (auto v : neighbors)
    if (v >= q_) throw InputError("state value out of range");
  return table_[key(centre, neighbors)];
}

std::pair<std::set<std::uint32_t>, std::set<std::uint32_t>> LocalRule::bs() const {
  if (count_table_.empty()) throw InputError("birth/survival lists need a binary symmetric rule");
  std::set<std::uint32_t> b, s;
  for (std::uint32_t n = 0; n <= k_; ++n) {
    if (next_by_count(0, n)) b.insert(n);
    if (next_by_count(1, n)) s.insert(n);
  }
  return {b, s};
}

std::string LocalRule::bs_string() const {
  auto [b, s] = bs();
  std::string out = "B";
  for (auto v : b) out += std::to_string(v);
  out += "/S";
  for (auto v : s) out += std::to_string(v);
  return out;
}

std::uint64_t LocalRule::symmetric_number() const {
  if (count_table_.empty()) throw InputError("rule number needs a binary symmetric rule");
  if (2 * (k_ + 1) > 64) throw CapExceeded("rule number does not fit in 64 bits");
  std::uint64_t n = 0;
  for (std::uint32_t cnt = 0; cnt <= k_; ++cnt)
    for (std::uint32_t c = 0; c < 2; ++c)
      if (next_by_count(c, cnt)) n |= std::uint64_t{1} << (2 * cnt + c);
  return n;
}

std::string LocalRule::symmetric_bit_string() const {
  auto n = symmetric_number();
  std::string s;
  for (std::uint32_t i = 0; i < 2 * (k_ + 1); ++i) s.push_back(((n >> i) & 1u) ? '1' : '0');
  return s;
}

boost::multiprecision::cpp_int bs_rule_count(std::uint32_t k) {
  return boost::multiprecision::cpp_int(1) << (2 * k + 2);
}

boost::multiprecision::cpp_int symmetric_rule_count(std::uint32_t q, std::uint32_t k) {
  // q^(C(k+q-1, q-1) * q)
  boost::multiprecision::cpp_int binom = 1;
  for (std::uint32_t i = 1; i < q; ++i) binom = binom * (k + i) / i;
  return boost::multiprecision::pow(boost::multiprecision::cpp_int(q),
                                    static_cast<unsigned>(binom * q));
}

Relation eca_relation(std::uint32_t n) {
  if (n > 255) throw InputError("elementary rule number must be below 256");
  auto d = Domain::from_labels({"p", "q", "r", "s"});
  return Relation::from_predicate(d, [n](std::span<const std::uint32_t> t) {
    return ((n >> (4 * t[0] + 2 * t[1] + t[2])) & 1u) == t[3];
  });
}

Relation rule_relation(const LocalRule& rule) {
  const auto k = rule.valence();
  std::vector<std::string> labels;
  for (std::uint32_t i = 1; i <= k + 2; ++i) labels.push_back("x" + std::to_string(i));
  auto d = Domain::from_labels(labels, rule.radix());
  return Relation::from_predicate(d, [&](std::span<const std::uint32_t> t) {
    return rule.next(t[k], t.subspan(0, k)) == t[k + 1];
  });
}

Relation life_relation() { return rule_relation(LocalRule::from_bs({3}, {2, 3}, 8)); }

}  // namespace dds
