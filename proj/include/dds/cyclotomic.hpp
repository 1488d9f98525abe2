#pragma once

// Exact integer polynomial arithmetic and the rings Z[zeta_M].

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace dds {

// Dense integer polynomial, coefficient i multiplies w^i. Arithmetic throws
// CapExceeded on int64 overflow instead of wrapping.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);
  static IntPoly monomial(std::int64_t c, std::size_t power);

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly&) const = default;

  // Exact division by a monic divisor; false when the remainder is nonzero.
  bool divides_by(const IntPoly& monic, IntPoly* quotient = nullptr) const;
  std::int64_t eval(std::int64_t w) const;
  std::complex<double> eval(std::complex<double> w) const;
  // "3w+3w^3" style, ascending powers.
  std::string to_string(const std::string& symbol = "w") const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::uint64_t euler_phi(std::uint64_t n);
const IntPoly& cyclotomic_poly(std::uint32_t d);

// Every d <= bound with Phi_d dividing p exactly. bound = 0 picks 2*deg^2
// (any Phi_d of degree <= deg p has d below that).
std::vector<std::uint32_t> cyclotomic_factors(const IntPoly& p, std::uint32_t bound = 0);

// Element of Z[zeta_M] as a polynomial in zeta of degree < phi(M).
class CycloElement {
 public:
  explicit CycloElement(std::uint32_t m);
  static CycloElement integer(std::uint32_t m, std::int64_t v);
  // zeta^k, k taken mod M.
  static CycloElement zeta_power(std::uint32_t m, long long k);
  // p(zeta^k)
  static CycloElement evaluate(const IntPoly& p, std::uint32_t m, long long k = 1);

  std::uint32_t modulus() const { return m_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const;

  CycloElement operator+(const CycloElement& o) const;
  CycloElement operator-(const CycloElement& o) const;
  CycloElement operator*(const CycloElement& o) const;
  bool operator==(const CycloElement&) const = default;

  // Image under zeta -> zeta^-1.
  CycloElement conj() const;
  // z * conj(z), exact.
  CycloElement norm2() const;
  // Value as an integer when the element lies in Z; throws otherwise.
  std::int64_t as_integer() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  void reduce(std::vector<std::int64_t> raw);
  std::uint32_t m_ = 1;
  std::vector<std::int64_t> c_;
};

}  // namespace dds
