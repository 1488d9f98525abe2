#include "dds/representation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "dds/errors.hpp"

namespace dds {

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  for (auto& row : rows) {
    if (row.size() != c_) throw InputError("ragged matrix literal");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw InputError("matrix shapes do not match");
  Matrix m(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Complex v = (*this)(i, k);
      if (v == Complex(0)) continue;
      for (std::size_t j = 0; j < o.c_; ++j) m(i, j) += v * o(k, j);
    }
  return m;
}

Matrix Matrix::operator*(Complex s) const {
  Matrix m = *this;
  for (auto& v : m.a_) v *= s;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Complex Matrix::trace() const {
  Complex t = 0;
  for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::distance(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) return INFINITY;
  double d = 0;
  for (std::size_t i = 0; i < a_.size(); ++i) d = std::max(d, std::abs(a_[i] - o.a_[i]));
  return d;
}

Matrix Matrix::direct_sum(const Matrix& o) const {
  Matrix m(r_ + o.r_, c_ + o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < o.r_; ++i)
    for (std::size_t j = 0; j < o.c_; ++j) m(r_ + i, c_ + j) = o(i, j);
  return m;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m * m.adjoint()).distance(Matrix::identity(m.rows())) <= tol;
}

Matrix permutation_matrix(const Perm& g) {
  Matrix m(g.degree(), g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) m(i, g[i]) = 1;
  return m;
}

UnitaryRep perm_representation(const PermGroup& g) {
  UnitaryRep rep;
  rep.dimension = g.degree();
  for (auto& e : g.elements()) rep.matrices.push_back(permutation_matrix(e));
  rep.faithful = true;
  return rep;
}

UnitaryRep perm_representation(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree()) throw InputError("subgroup acts on a different set");
  for (auto& x : h.elements())
    if (!g.contains(x)) throw InputError("H is not a subgroup of G");
  // coset Hx identified by its smallest element index
  std::vector<std::size_t> coset_of(g.order());
  std::map<std::size_t, std::size_t> label;  // smallest element index -> coset position
  for (std::size_t i = 0; i < g.order(); ++i) {
    std::size_t mn = SIZE_MAX;
    for (auto& y : h.elements()) mn = std::min(mn, g.index_of(y * g.element(i)));
    coset_of[i] = mn;
    label.emplace(mn, 0);
  }
  std::size_t k = 0;
  for (auto& [mn, pos] : label) pos = k++;
  std::vector<std::size_t> rep_of(label.size());
  for (auto& [mn, pos] : label) rep_of[pos] = mn;

  UnitaryRep rep;
  rep.dimension = label.size();
  for (auto& x : g.elements()) {
    Matrix m(rep.dimension, rep.dimension);
    for (std::size_t i = 0; i < rep.dimension; ++i) {
      auto j = label.at(coset_of[g.index_of(g.element(rep_of[i]) * x)]);
      m(i, j) = 1;
    }
    rep.matrices.push_back(std::move(m));
  }
  // core: elements lying in every conjugate of H
  std::size_t core = 0;
  for (auto& x : h.elements()) {
    bool all = true;
    for (auto& y : g.elements())
      if (!h.contains(y * x * y.inverse())) {
        all = false;
        break;
      }
    core += all;
  }
  rep.faithful = core == 1;
  return rep;
}

UnitaryRep regular_representation(const PermGroup& g) {
  UnitaryRep rep;
  rep.dimension = g.order();
  for (auto& x : g.elements()) {
    Matrix m(g.order(), g.order());
    for (std::size_t i = 0; i < g.order(); ++i) m(i, g.index_of(g.element(i) * x)) = 1;
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

bool is_homomorphism(const PermGroup& g, const UnitaryRep& rep, double tol) {
  if (rep.matrices.size() != g.order()) return false;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) {
      auto k = g.index_of(g.element(i) * g.element(j));
      if ((rep.matrices[i] * rep.matrices[j]).distance(rep.matrices[k]) > tol) return false;
    }
  return true;
}

bool all_unitary(const UnitaryRep& rep, double tol) {
  return std::all_of(rep.matrices.begin(), rep.matrices.end(), [tol](const Matrix& m) { return is_unitary(m, tol); });
}

std::vector<Complex> character(const UnitaryRep& rep) {
  std::vector<Complex> out;
  for (auto& m : rep.matrices) out.push_back(m.trace());
  return out;
}

CharTable CharTable::s3() {
  CharTable t;
  t.name = "S3";
  t.order = 6;
  t.class_names = {"e", "transposition", "3-cycle"};
  t.class_sizes = {1, 3, 2};
  t.rows = {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
  return t;
}

CharTable CharTable::c4() {
  CharTable t;
  t.name = "C4";
  t.order = 4;
  t.class_names = {"e", "c", "c^2", "c^3"};
  t.class_sizes = {1, 1, 1, 1};
  const Complex i(0, 1);
  for (int k = 0; k < 4; ++k) {
    std::vector<Complex> row;
    for (int j = 0; j < 4; ++j) row.push_back(std::pow(i, j * k));
    t.rows.push_back(row);
  }
  return t;
}

CharTable CharTable::trivial() {
  CharTable t;
  t.name = "1";
  t.order = 1;
  t.class_names = {"e"};
  t.class_sizes = {1};
  t.rows = {{1}};
  return t;
}

CharTableReport char_table_checks(const CharTable& t, double tol) {
  CharTableReport r;
  const std::size_t k = t.class_sizes.size();
  bool shaped = t.rows.size() == k;
  for (auto& row : t.rows) shaped = shaped && row.size() == k;
  std::size_t total = 0;
  for (auto s : t.class_sizes) total += s;
  if (!shaped || total != t.order || k == 0) return r;

  r.rows_orthogonal = true;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Complex s = 0;
      for (std::size_t c = 0; c < k; ++c) s += static_cast<double>(t.class_sizes[c]) * t.rows[a][c] * std::conj(t.rows[b][c]);
      const double want = a == b ? static_cast<double>(t.order) : 0.0;
      if (std::abs(s - want) > tol) r.rows_orthogonal = false;
    }
  long sum = 0;
  r.dimensions_divide = true;
  for (auto& row : t.rows) {
    const long d = std::lround(row[0].real());
    r.dimensions.push_back(d);
    sum += d * d;
    if (d <= 0 || t.order % static_cast<std::size_t>(d) != 0) r.dimensions_divide = false;
  }
  r.dimension_sum = sum == static_cast<long>(t.order);
  return r;
}

std::vector<double> multiplicities(const CharTable& t, const std::vector<Complex>& class_character) {
  std::vector<double> out;
  for (auto& row : t.rows) {
    Complex s = 0;
    for (std::size_t c = 0; c < row.size(); ++c)
      s += static_cast<double>(t.class_sizes[c]) * class_character.at(c) * std::conj(row[c]);
    out.push_back(s.real() / static_cast<double>(t.order));
  }
  return out;
}

S3Embedding s3_embedding(double alpha, double beta) {
  const Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
  const Complex wb = std::conj(w);
  S3Embedding e;
  e.names = {"e", "a1", "a2", "a3", "b1", "b2"};
  e.elements = {Perm({0, 1, 2}), Perm({1, 0, 2}), Perm({0, 2, 1}),
                Perm({2, 1, 0}), Perm({1, 2, 0}), Perm({2, 0, 1})};
  e.delta = {
      Matrix{{1, 0}, {0, 1}},  Matrix{{0, wb}, {w, 0}}, Matrix{{0, 1}, {1, 0}},
      Matrix{{0, w}, {wb, 0}}, Matrix{{w, 0}, {0, wb}}, Matrix{{wb, 0}, {0, w}},
  };
  for (auto& d : e.delta) e.u_q.push_back(d.direct_sum(Matrix{{1}}));
  e.u_p = {
      Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
      Matrix{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}},
      Matrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, Matrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}},
  };
  const Complex eb = std::polar(1.0, beta);
  e.s = Matrix{{1, 1, eb}, {w, wb, eb}, {wb, w, eb}} * (std::polar(1.0, alpha) / std::sqrt(3.0));
  return e;
}

namespace {

bool table_matches(const std::vector<Perm>& elems, const std::vector<Matrix>& mats, double tol) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      auto prod = elems[i] * elems[j];
      auto k = static_cast<std::size_t>(std::find(elems.begin(), elems.end(), prod) - elems.begin());
      if (k == elems.size()) return false;
      if ((mats[i] * mats[j]).distance(mats[k]) > tol) return false;
    }
  return true;
}

}  // namespace

S3EmbeddingReport s3_embedding_check(double alpha, double beta, double tol) {
  auto e = s3_embedding(alpha, beta);
  S3EmbeddingReport r;
  r.delta_homomorphism = table_matches(e.elements, e.delta, tol);
  r.uq_homomorphism = table_matches(e.elements, e.u_q, tol);
  r.up_homomorphism = table_matches(e.elements, e.u_p, tol);
  r.s_unitary = is_unitary(e.s, tol);
  const Matrix s_inv = e.s.adjoint();
  r.conjugation_matches = true;
  r.entries_binary = true;
  for (std::size_t g = 0; g < e.elements.size(); ++g) {
    Matrix c = e.s * e.u_q[g] * s_inv;
    const double dev = c.distance(e.u_p[g]);
    r.max_deviation = std::max(r.max_deviation, dev);
    if (dev > tol) r.conjugation_matches = false;
    if (permutation_matrix(e.elements[g]).distance(e.u_p[g]) > tol) r.conjugation_matches = false;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const Complex v = c(i, j);
        if (std::min(std::abs(v), std::abs(v - 1.0)) > tol) r.entries_binary = false;
      }
  }
  return r;
}

nlohmann::ordered_json S3EmbeddingReport::to_json() const {
  nlohmann::ordered_json j;
  j["delta_homomorphism"] = delta_homomorphism;
  j["uq_homomorphism"] = uq_homomorphism;
  j["up_homomorphism"] = up_homomorphism;
  j["s_unitary"] = s_unitary;
  j["conjugation_matches"] = conjugation_matches;
  j["entries_binary"] = entries_binary;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", max_deviation);
  j["max_deviation"] = buf;
  j["ok"] = ok();
  return j;
}

}  // namespace dds
