#pragma once

// Multivariate polynomials over a prime field F_p with exponents reduced by
// x^p = x, i.e. polynomial functions on F_p^k.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dds/relation.hpp"

namespace dds {

class FieldPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  FieldPoly() = default;
  FieldPoly(std::uint32_t p, std::vector<Point> vars);

  static FieldPoly constant(std::uint32_t p, std::vector<Point> vars, std::uint32_t c);
  static FieldPoly variable(std::uint32_t p, std::vector<Point> vars, std::size_t pos);

  std::uint32_t prime() const { return p_; }
  const std::vector<Point>& variables() const { return vars_; }
  const std::map<Exponents, std::uint32_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Adds c * monomial (exponents reduced first).
  void add_term(Exponents e, std::uint32_t c);

  FieldPoly operator+(const FieldPoly& o) const;
  FieldPoly operator-(const FieldPoly& o) const;
  FieldPoly operator*(const FieldPoly& o) const;
  FieldPoly scaled(std::uint32_t c) const;

  std::uint32_t eval(std::span<const std::uint32_t> values) const;

  // Graded order, highest degree first; ties broken by comparing exponents
  // from the last variable backwards. Single-character labels are juxtaposed.
  std::string to_string() const;

  // Same polynomial written over a variable list that contains every current
  // variable (matched by point id).
  FieldPoly over(const std::vector<Point>& vars) const;

  bool operator==(const FieldPoly&) const = default;

 private:
  void check_compatible(const FieldPoly& o) const;
  std::uint32_t reduce_exp(std::uint64_t e) const;

  std::uint32_t p_ = 2;
  std::vector<Point> vars_;
  std::map<Exponents, std::uint32_t> terms_;
};

bool is_prime_number(std::uint32_t n);

// Polynomial vanishing exactly on the members of r (value 1 elsewhere).
FieldPoly interpolate(const Relation& r, std::uint32_t p);

// e_k over the variables at `positions` (all variables when empty).
FieldPoly elementary_symmetric(std::uint32_t k, const std::vector<Point>& vars, std::uint32_t p = 2,
                               std::span<const std::size_t> positions = {});

}  // namespace dds
