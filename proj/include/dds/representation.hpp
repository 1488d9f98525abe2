#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "dds/perm.hpp"

namespace dds {

using Complex = std::complex<double>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator*(Complex s) const;
  Matrix adjoint() const;
  Complex trace() const;
  // Largest entrywise absolute difference.
  double distance(const Matrix& o) const;
  // Block-diagonal sum.
  Matrix direct_sum(const Matrix& o) const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Complex> a_;
};

bool is_unitary(const Matrix& m, double tol = 1e-10);

// One matrix per group element, in group.elements() order.
struct UnitaryRep {
  std::size_t dimension = 0;
  std::vector<Matrix> matrices;
  bool faithful = true;
};

// Permutation matrix with P[i][g[i]] = 1, so P(g)P(h) = P(gh).
Matrix permutation_matrix(const Perm& g);

// Natural action on the points.
UnitaryRep perm_representation(const PermGroup& g);
// Action on right cosets H\G; cosets are ordered by their smallest element.
// faithful is false when the core of H is non-trivial.
UnitaryRep perm_representation(const PermGroup& g, const PermGroup& h);
UnitaryRep regular_representation(const PermGroup& g);

bool is_homomorphism(const PermGroup& g, const UnitaryRep& rep, double tol = 1e-10);
bool all_unitary(const UnitaryRep& rep, double tol = 1e-10);
std::vector<Complex> character(const UnitaryRep& rep);

struct CharTable {
  std::string name;
  std::size_t order = 0;
  std::vector<std::string> class_names;
  std::vector<std::size_t> class_sizes;
  std::vector<std::vector<Complex>> rows;

  static CharTable s3();
  static CharTable c4();
  static CharTable trivial();
};

struct CharTableReport {
  bool rows_orthogonal = false;
  bool dimension_sum = false;   // sum of d_j^2 equals |G|
  bool dimensions_divide = false;
  std::vector<long> dimensions;
  bool ok() const { return rows_orthogonal && dimension_sum && dimensions_divide; }
};

CharTableReport char_table_checks(const CharTable& t, double tol = 1e-10);

// Multiplicity of each irreducible character in a class-function character.
std::vector<double> multiplicities(const CharTable& t, const std::vector<Complex>& class_character);

// The worked S3 example: element names e a1 a2 a3 b1 b2, the printed 2-dim
// matrices Delta, U_q = Delta (+) [1], the printed permutation matrices U_p,
// and the transition matrix S(alpha, beta).
struct S3Embedding {
  std::vector<std::string> names;
  std::vector<Perm> elements;       // as permutations of three points
  std::vector<Matrix> delta, u_q, u_p;
  Matrix s;
};

S3Embedding s3_embedding(double alpha, double beta);

struct S3EmbeddingReport {
  bool delta_homomorphism = false;
  bool uq_homomorphism = false;
  bool up_homomorphism = false;
  bool s_unitary = false;
  bool conjugation_matches = false;   // S U_q S^-1 == U_p for all six elements
  bool entries_binary = false;        // every conjugated entry within tol of 0 or 1
  double max_deviation = 0;
  bool ok() const {
    return delta_homomorphism && uq_homomorphism && up_homomorphism && s_unitary && conjugation_matches &&
           entries_binary;
  }
  nlohmann::ordered_json to_json() const;
};

S3EmbeddingReport s3_embedding_check(double alpha, double beta, double tol = 1e-10);

}  // namespace dds
