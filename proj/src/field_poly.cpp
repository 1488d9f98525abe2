#include "dds/field_poly.hpp"

#include <algorithm>

#include "dds/errors.hpp"

namespace dds {

namespace {

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// M[e][a] = coefficient of x^e in 1 - (x - a)^(p-1).
std::vector<std::vector<std::uint32_t>> indicator_matrix(std::uint32_t p) {
  std::vector<std::uint64_t> binom(p, 0);
  binom[0] = 1;
  for (std::uint32_t n = 1; n < p; ++n)
    for (std::uint32_t k = n; k > 0; --k) binom[k] = (binom[k] + binom[k - 1]) % p;
  std::vector<std::vector<std::uint32_t>> m(p, std::vector<std::uint32_t>(p, 0));
  for (std::uint32_t a = 0; a < p; ++a) {
    const std::uint32_t neg_a = (p - a) % p;
    for (std::uint32_t e = 0; e < p; ++e) {
      std::uint64_t c = binom[e] * mod_pow(neg_a, p - 1 - e, p) % p;
      std::uint64_t v = (p - c) % p;
      if (e == 0) v = (v + 1) % p;
      m[e][a] = static_cast<std::uint32_t>(v);
    }
  }
  return m;
}

}  // namespace

bool is_prime_number(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldPoly::FieldPoly(std::uint32_t p, std::vector<Point> vars) : p_(p), vars_(std::move(vars)) {
  if (!is_prime_number(p)) throw InputError("field characteristic must be prime");
}

FieldPoly FieldPoly::constant(std::uint32_t p, std::vector<Point> vars, std::uint32_t c) {
  FieldPoly f(p, std::move(vars));
  f.add_term(Exponents(f.vars_.size(), 0), c);
  return f;
}

FieldPoly FieldPoly::variable(std::uint32_t p, std::vector<Point> vars, std::size_t pos) {
  FieldPoly f(p, std::move(vars));
  if (pos >= f.vars_.size()) throw InputError("variable position out of range");
  Exponents e(f.vars_.size(), 0);
  e[pos] = 1;
  f.add_term(std::move(e), 1);
  return f;
}

std::uint32_t FieldPoly::reduce_exp(std::uint64_t e) const {
  if (e < p_) return static_cast<std::uint32_t>(e);
  return static_cast<std::uint32_t>((e - 1) % (p_ - 1) + 1);
}

void FieldPoly::add_term(Exponents e, std::uint32_t c) {
  if (e.size() != vars_.size()) throw InputError("exponent vector length mismatch");
  for (auto& x : e) x = reduce_exp(x);
  c %= p_;
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(std::move(e), c);
  if (!fresh) {
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

void FieldPoly::check_compatible(const FieldPoly& o) const {
  if (p_ != o.p_ || vars_ != o.vars_) throw InputError("polynomials over different fields or variables");
}

FieldPoly FieldPoly::operator+(const FieldPoly& o) const {
  check_compatible(o);
  FieldPoly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

FieldPoly FieldPoly::operator-(const FieldPoly& o) const { return *this + o.scaled(p_ - 1); }

FieldPoly FieldPoly::scaled(std::uint32_t c) const {
  FieldPoly r(p_, vars_);
  for (auto& [e, v] : terms_) r.add_term(e, static_cast<std::uint32_t>(std::uint64_t{v} * c % p_));
  return r;
}

FieldPoly FieldPoly::operator*(const FieldPoly& o) const {
  check_compatible(o);
  FieldPoly r(p_, vars_);
  for (auto& [ea, ca] : terms_) {
    for (auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(std::move(e), static_cast<std::uint32_t>(std::uint64_t{ca} * cb % p_));
    }
  }
  return r;
}

std::uint32_t FieldPoly::eval(std::span<const std::uint32_t> values) const {
  if (values.size() != vars_.size()) throw InputError("evaluation point has wrong arity");
  std::uint64_t acc = 0;
  for (auto& [e, c] : terms_) {
    std::uint64_t m = c;
    for (std::size_t i = 0; i < e.size() && m; ++i)
      if (e[i]) m = m * mod_pow(values[i], e[i], p_) % p_;
    acc = (acc + m) % p_;
  }
  return static_cast<std::uint32_t>(acc);
}

std::string FieldPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, std::uint32_t>> ts(terms_.begin(), terms_.end());
  auto degree = [](const Exponents& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
  };
  std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    auto da = degree(a.first), db = degree(b.first);
    if (da != db) return da > db;
    for (std::size_t i = a.first.size(); i-- > 0;)
      if (a.first[i] != b.first[i]) return a.first[i] > b.first[i];
    return false;
  });
  const bool short_names = std::all_of(vars_.begin(), vars_.end(), [](const Point& v) { return v.label.size() == 1; });
  std::string out;
  for (auto& [e, c] : ts) {
    if (!out.empty()) out += "+";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty() && !short_names) mono += "*";
      mono += vars_[i].label;
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += std::to_string(c);
    else if (c == 1)
      out += mono;
    else
      out += std::to_string(c) + (short_names ? "" : "*") + mono;
  }
  return out;
}

FieldPoly FieldPoly::over(const std::vector<Point>& vars) const {
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find_if(vars.begin(), vars.end(), [&](const Point& v) { return v.id == vars_[i].id; });
    if (it == vars.end()) throw InputError("target variable list is missing a variable");
    where[i] = static_cast<std::size_t>(it - vars.begin());
  }
  FieldPoly r(p_, vars);
  for (auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    r.add_term(std::move(ne), c);
  }
  return r;
}

FieldPoly interpolate(const Relation& r, std::uint32_t p) {
  if (!is_prime_number(p)) throw InputError("interpolation needs a prime field");
  const Domain& d = r.domain();
  for (auto q : d.radices())
    if (q != p) throw InputError("relation radix does not match field size");
  const std::uint64_t n = r.volume();
  // indicator of non-members, then an independent linear map along each axis
  std::vector<std::uint32_t> coef(n);
  for (std::uint64_t i = 0; i < n; ++i) coef[i] = r.contains(i) ? 0 : 1;
  const auto m = indicator_matrix(p);
  std::uint64_t stride = 1;
  std::vector<std::uint64_t> tmp(p);
  for (std::size_t axis = 0; axis < d.size(); ++axis) {
    const std::uint64_t block = stride * p;
    for (std::uint64_t base = 0; base < n; base += block) {
      for (std::uint64_t low = 0; low < stride; ++low) {
        for (std::uint32_t e = 0; e < p; ++e) {
          std::uint64_t s = 0;
          for (std::uint32_t a = 0; a < p; ++a)
            s += std::uint64_t{m[e][a]} * coef[base + low + a * stride];
          tmp[e] = s % p;
        }
        for (std::uint32_t e = 0; e < p; ++e) coef[base + low + e * stride] = static_cast<std::uint32_t>(tmp[e]);
      }
    }
    stride = block;
  }
  FieldPoly f(p, d.points());
  for (std::uint64_t i = 0; i < n; ++i)
    if (coef[i]) f.add_term(tuple_of(i, d), coef[i]);
  return f;
}

FieldPoly elementary_symmetric(std::uint32_t k, const std::vector<Point>& vars, std::uint32_t p,
                               std::span<const std::size_t> positions) {
  std::vector<std::size_t> pos(positions.begin(), positions.end());
  if (pos.empty())
    for (std::size_t i = 0; i < vars.size(); ++i) pos.push_back(i);
  if (k > pos.size()) throw InputError("elementary symmetric degree exceeds variable count");
  FieldPoly f(p, vars);
  // walk k-subsets of pos in lexicographic order
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    FieldPoly::Exponents e(vars.size(), 0);
    for (auto i : pick) e[pos[i]] = 1;
    f.add_term(std::move(e), 1);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == pos.size() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return f;
}

}  // namespace dds
