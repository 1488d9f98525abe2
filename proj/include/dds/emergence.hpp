#pragma once

// One-dimensional Bernoulli walk: step +1 with probability p, -1 otherwise.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dds {

using Rational = boost::multiprecision::cpp_rational;

// (n+ + n-)! / (n+! n-!) p^n+ (1-p)^n-
double path_prob(std::uint64_t n_right, std::uint64_t n_left, double p_right);

// Probability of passing (x, t) on a walk from (0, 0) conditioned to end at (X, T).
Rational exact_conditional(long x, long t, long X, long T);

// Same quantity through Bayes' rule with an explicit step probability.
Rational bayes_conditional(long x, long t, long X, long T, const Rational& p_right);

// Gaussian approximation of the walk density with drift v; includes the
// factor 2 that accounts for the lattice parity of x.
double gauss_density(double x, double t, double v);
double gauss_conditional(double x, double t, double X, double T, double v);

struct HistoryPoint {
  std::vector<std::uint64_t> n;
  std::uint64_t time() const;
};

enum class ConeRelation { coincident, past, future, elsewhere };
std::string to_string(ConeRelation r);

// Where a lies relative to b: past when a divides b componentwise.
ConeRelation cone(const HistoryPoint& a, const HistoryPoint& b);

struct CompareRow {
  long x;
  double exact;
  double approx;
};
// Exact P(x, t) against the Gaussian density at every reachable x.
std::vector<CompareRow> compare_exact_gauss(long t, double v);
std::string compare_csv(const std::vector<CompareRow>& rows);

}  // namespace dds
