#include "dds/emergence.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "dds/errors.hpp"

namespace dds {

using boost::multiprecision::cpp_int;

namespace {

double log_term(std::uint64_t n, double p) { return n == 0 ? 0.0 : static_cast<double>(n) * std::log(p); }

cpp_int binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  cpp_int r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool parity_ok(long x, long t) { return ((x + t) % 2 + 2) % 2 == 0; }

void check_endpoints(long x, long t, long X, long T) {
  if (t < 0 || T < t) throw InputError("need 0 <= t <= T");
  if (!parity_ok(x, t) || !parity_ok(X, T)) throw InputError("position and time must have equal parity");
  if (std::abs(x) > t || std::abs(X) > T || std::abs(X - x) > T - t) throw InputError("point outside the light cone");
}

Rational walk_prob(long x, long t, const Rational& p) {
  const long up = (t + x) / 2, down = (t - x) / 2;
  const Rational q = 1 - p;
  Rational r = Rational(binom(t, up));
  for (long i = 0; i < up; ++i) r *= p;
  for (long i = 0; i < down; ++i) r *= q;
  return r;
}

void check_velocity(double v) {
  if (!(std::abs(v) < 1)) throw InputError("velocity must satisfy |v| < 1");
}

}  // namespace

double path_prob(std::uint64_t n_right, std::uint64_t n_left, double p_right) {
  if (!(p_right >= 0 && p_right <= 1)) throw InputError("probability outside [0,1]");
  const double q = 1 - p_right;
  if ((p_right == 0 && n_right > 0) || (q == 0 && n_left > 0)) return 0;
  const double n = static_cast<double>(n_right + n_left);
  const double lc = std::lgamma(n + 1) - std::lgamma(static_cast<double>(n_right) + 1) -
                    std::lgamma(static_cast<double>(n_left) + 1);
  return std::exp(lc + log_term(n_right, p_right) + log_term(n_left, q));
}

Rational exact_conditional(long x, long t, long X, long T) {
  check_endpoints(x, t, X, T);
  cpp_int num = binom(t, (t + x) / 2) * binom(T - t, (T - t + X - x) / 2);
  return Rational(num, binom(T, (T + X) / 2));
}

Rational bayes_conditional(long x, long t, long X, long T, const Rational& p_right) {
  check_endpoints(x, t, X, T);
  if (p_right < 0 || p_right > 1) throw InputError("probability outside [0,1]");
  const Rational whole = walk_prob(X, T, p_right);
  if (whole == 0) throw InputError("endpoint has probability zero");
  return walk_prob(x, t, p_right) * walk_prob(X - x, T - t, p_right) / whole;
}

double gauss_density(double x, double t, double v) {
  check_velocity(v);
  if (!(t > 0)) throw InputError("need t > 0");
  const double s = 1 - v * v;
  const double d = x - v * t;
  return std::sqrt(2 / (std::numbers::pi * t)) / std::sqrt(s) * std::exp(-d * d / (2 * t * s));
}

double gauss_conditional(double x, double t, double X, double T, double v) {
  check_velocity(v);
  if (!(t > 0 && t < T)) throw InputError("need 0 < t < T");
  const double s = 1 - v * v;
  const double den = s * t * T * (T - t);
  const double d = X * t - x * T;
  return T / std::sqrt(std::numbers::pi / 2 * den) * std::exp(-d * d / (2 * den));
}

std::uint64_t HistoryPoint::time() const {
  std::uint64_t s = 0;
  for (auto c : n) s += c;
  return s;
}

std::string to_string(ConeRelation r) {
  switch (r) {
    case ConeRelation::coincident: return "coincident";
    case ConeRelation::past: return "past";
    case ConeRelation::future: return "future";
    case ConeRelation::elsewhere: return "elsewhere";
  }
  return "?";
}

ConeRelation cone(const HistoryPoint& a, const HistoryPoint& b) {
  if (a.n.size() != b.n.size()) throw InputError("history points of different dimension");
  bool le = true, ge = true;
  for (std::size_t i = 0; i < a.n.size(); ++i) {
    le = le && a.n[i] <= b.n[i];
    ge = ge && a.n[i] >= b.n[i];
  }
  if (le && ge) return ConeRelation::coincident;
  if (le) return ConeRelation::past;
  if (ge) return ConeRelation::future;
  return ConeRelation::elsewhere;
}

std::vector<CompareRow> compare_exact_gauss(long t, double v) {
  check_velocity(v);
  if (t <= 0) throw InputError("need t > 0");
  const double p = (1 + v) / 2;
  std::vector<CompareRow> rows;
  for (long x = -t; x <= t; x += 2) {
    const auto up = static_cast<std::uint64_t>((t + x) / 2), down = static_cast<std::uint64_t>((t - x) / 2);
    rows.push_back({x, path_prob(up, down, p), gauss_density(static_cast<double>(x), static_cast<double>(t), v)});
  }
  return rows;
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
  std::string s = "x,exact,approx\n";
  char buf[96];
  for (auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%ld,%.12e,%.12e\n", r.x, r.exact, r.approx);
    s += buf;
  }
  return s;
}

}  // namespace dds
