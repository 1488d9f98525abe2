#include "dds/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "dds/errors.hpp"

namespace dds {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CapExceeded("integer coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapExceeded("integer coefficient overflow");
  return r;
}

// ---- IntPoly ----

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(std::int64_t c, std::size_t power) {
  std::vector<std::int64_t> v(power + 1, 0);
  v[power] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<std::int64_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add((*this)[i], o[i]);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<std::int64_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add((*this)[i], checked_mul(-1, o[i]));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = checked_add(v[i + j], checked_mul(c_[i], o.c_[j]));
  return IntPoly(std::move(v));
}

bool IntPoly::divides_by(const IntPoly& monic, IntPoly* quotient) const {
  if (monic.is_zero() || monic.c_.back() != 1) throw InputError("divisor must be monic");
  if (degree() < monic.degree()) {
    if (quotient) *quotient = IntPoly();
    return is_zero();
  }
  std::vector<std::int64_t> rem = c_;
  const std::size_t dm = monic.c_.size() - 1;
  std::vector<std::int64_t> q(rem.size() - dm, 0);
  for (std::size_t i = rem.size(); i-- > dm;) {
    const std::int64_t lead = rem[i];
    if (lead == 0) continue;
    q[i - dm] = lead;
    for (std::size_t j = 0; j <= dm; ++j) rem[i - dm + j] = checked_add(rem[i - dm + j], checked_mul(-lead, monic.c_[j]));
  }
  for (std::size_t i = 0; i < dm; ++i)
    if (rem[i] != 0) return false;
  if (quotient) *quotient = IntPoly(std::move(q));
  return true;
}

std::int64_t IntPoly::eval(std::int64_t w) const {
  std::int64_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = checked_add(checked_mul(acc, w), c_[i]);
  return acc;
}

std::complex<double> IntPoly::eval(std::complex<double> w) const {
  std::complex<double> acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * w + static_cast<double>(c_[i]);
  return acc;
}

std::string IntPoly::to_string(const std::string& symbol) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const auto c = c_[i];
    if (c == 0) continue;
    if (!s.empty() && c > 0) s += "+";
    if (c == -1 && i > 0)
      s += "-";
    else if (c != 1 || i == 0)
      s += std::to_string(c);
    if (i > 0) s += symbol;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

const IntPoly& cyclotomic_poly(std::uint32_t d) {
  static std::mutex mu;
  static std::map<std::uint32_t, IntPoly> cache;
  if (d == 0) throw InputError("cyclotomic index must be positive");
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  std::vector<const IntPoly*> divisors;
  for (std::uint32_t e = 1; e < d; ++e)
    if (d % e == 0) divisors.push_back(&cyclotomic_poly(e));
  std::vector<std::int64_t> c(d + 1, 0);
  c[0] = -1;
  c[d] = 1;
  IntPoly p(std::move(c));
  for (auto* f : divisors) {
    IntPoly q;
    if (!p.divides_by(*f, &q)) throw InvariantViolation("cyclotomic recursion failed");
    p = q;
  }
  std::lock_guard lock(mu);
  return cache.emplace(d, std::move(p)).first->second;
}

std::vector<std::uint32_t> cyclotomic_factors(const IntPoly& p, std::uint32_t bound) {
  if (p.is_zero()) throw InputError("zero polynomial has every root");
  const auto deg = static_cast<std::uint32_t>(p.degree());
  if (bound == 0) bound = std::max<std::uint32_t>(2, 2 * deg * deg);
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= bound; ++d) {
    if (euler_phi(d) > deg) continue;
    if (p.divides_by(cyclotomic_poly(d))) out.push_back(d);
  }
  return out;
}

// ---- CycloElement ----

CycloElement::CycloElement(std::uint32_t m) : m_(m) {
  if (m == 0) throw InputError("cyclotomic modulus must be positive");
  c_.assign(euler_phi(m), 0);
}

void CycloElement::reduce(std::vector<std::int64_t> raw) {
  const auto& phi = cyclotomic_poly(m_).coeffs();
  const std::size_t dm = phi.size() - 1;
  for (std::size_t i = raw.size(); i-- > dm;) {
    const std::int64_t lead = raw[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) raw[i - dm + j] = checked_add(raw[i - dm + j], checked_mul(-lead, phi[j]));
  }
  raw.resize(dm, 0);
  c_ = std::move(raw);
}

CycloElement CycloElement::integer(std::uint32_t m, std::int64_t v) {
  CycloElement z(m);
  z.c_[0] = v;
  return z;
}

CycloElement CycloElement::zeta_power(std::uint32_t m, long long k) {
  CycloElement z(m);
  const auto e = static_cast<std::size_t>(((k % static_cast<long long>(m)) + m) % m);
  std::vector<std::int64_t> raw(std::max<std::size_t>(e + 1, z.c_.size()), 0);
  raw[e] = 1;
  z.reduce(std::move(raw));
  return z;
}

CycloElement CycloElement::evaluate(const IntPoly& p, std::uint32_t m, long long k) {
  CycloElement z(m);
  std::vector<std::int64_t> raw(std::max<std::size_t>(m, z.c_.size()), 0);
  const long long km = ((k % static_cast<long long>(m)) + m) % m;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const auto e = static_cast<std::size_t>((static_cast<long long>(i % m) * km) % m);
    raw[e] = checked_add(raw[e], p.coeffs()[i]);
  }
  z.reduce(std::move(raw));
  return z;
}

bool CycloElement::is_zero() const {
  for (auto v : c_)
    if (v) return false;
  return true;
}

CycloElement CycloElement::operator+(const CycloElement& o) const {
  if (m_ != o.m_) throw InputError("cyclotomic moduli differ");
  CycloElement r(m_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_add(c_[i], o.c_[i]);
  return r;
}

CycloElement CycloElement::operator-(const CycloElement& o) const {
  if (m_ != o.m_) throw InputError("cyclotomic moduli differ");
  CycloElement r(m_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_add(c_[i], checked_mul(-1, o.c_[i]));
  return r;
}

CycloElement CycloElement::operator*(const CycloElement& o) const {
  if (m_ != o.m_) throw InputError("cyclotomic moduli differ");
  std::vector<std::int64_t> raw(c_.size() * 2 + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) raw[i + j] = checked_add(raw[i + j], checked_mul(c_[i], o.c_[j]));
  CycloElement r(m_);
  r.reduce(std::move(raw));
  return r;
}

CycloElement CycloElement::conj() const {
  std::vector<std::int64_t> raw(std::max<std::size_t>(m_, c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const auto e = (m_ - i % m_) % m_;
    raw[e] = checked_add(raw[e], c_[i]);
  }
  CycloElement r(m_);
  r.reduce(std::move(raw));
  return r;
}

CycloElement CycloElement::norm2() const { return *this * conj(); }

std::int64_t CycloElement::as_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i]) throw InvariantViolation("cyclotomic element is not an integer");
  return c_.empty() ? 0 : c_[0];
}

std::complex<double> CycloElement::to_complex() const {
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    acc += static_cast<double>(c_[i]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / m_);
  return acc;
}

std::string CycloElement::to_string() const { return IntPoly(c_).to_string("z"); }

}  // namespace dds
