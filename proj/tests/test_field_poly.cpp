#include <doctest.h>

#include <functional>
#include <random>

#include "dds/errors.hpp"
#include "dds/field_poly.hpp"
#include "dds/local_rule.hpp"
#include "oracle.hpp"

using namespace dds;

namespace {

using Fn = std::function<std::uint32_t(const std::vector<std::uint32_t>&)>;

// Compares a polynomial against a hand-written GF(2) function on every tuple.
bool same_function(const FieldPoly& f, std::size_t n, const Fn& g) {
  std::vector<std::uint32_t> v(n);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    for (std::size_t k = 0; k < n; ++k) v[k] = (i >> k) & 1;
    if (f.eval(v) != (g(v) & 1u)) return false;
  }
  return true;
}

std::uint32_t e_k(const std::vector<std::uint32_t>& v, std::size_t begin, std::size_t end, std::size_t skip,
                  std::uint32_t k) {
  std::uint32_t c = 0;
  for (std::size_t i = begin; i < end; ++i)
    if (i != skip) c += v[i];
  // e_k of 0/1 values is C(c, k) mod 2
  std::uint64_t b = 1;
  for (std::uint32_t i = 0; i < k; ++i) b = b * (c - i) / (i + 1);
  return k > c ? 0 : static_cast<std::uint32_t>(b & 1);
}

}  // namespace

TEST_SUITE("field_poly") {

TEST_CASE("rule 30 and rule 90 polynomials") {
  auto r30 = eca_relation(30);
  auto f = interpolate(r30, 2);
  CHECK(f.to_string() == "qr+s+r+q+p");

  auto r90 = eca_relation(90);
  auto face = project(r90, r90.domain().select(std::vector<std::size_t>{0, 2, 3}));
  CHECK(same_function(interpolate(face, 2), 3, [](auto& v) { return v[2] + v[0] + v[1]; }));

  auto r105 = eca_relation(105);
  std::vector<std::uint32_t> ones{1, 1, 1, 1};
  CHECK(interpolate(r105, 2).eval(ones) == 1);
  CHECK(same_function(interpolate(r105, 2), 4, [](auto& v) { return v[3] + v[0] + v[1] + v[2] + 1; }));
}

TEST_CASE("rule 110 polynomial and its consequences") {
  auto r = eca_relation(110);
  // p q r s -> indices 0 1 2 3
  CHECK(same_function(interpolate(r, 2), 4,
                      [](auto& v) { return v[0] * v[1] * v[2] + v[1] * v[2] + v[3] + v[2] + v[1]; }));
  auto pqs = project(r, r.domain().select(std::vector<std::size_t>{0, 1, 3}));
  CHECK(same_function(interpolate(pqs, 2), 3,
                      [](auto& v) { return v[0] * v[1] * v[2] + v[1] * v[2] + v[0] * v[1] + v[1]; }));
  auto prs = project(r, r.domain().select(std::vector<std::size_t>{0, 2, 3}));
  CHECK(same_function(interpolate(prs, 2), 3,
                      [](auto& v) { return v[0] * v[1] * v[2] + v[1] * v[2] + v[0] * v[1] + v[1]; }));
  auto qrs = project(r, r.domain().select(std::vector<std::size_t>{1, 2, 3}));
  CHECK(same_function(interpolate(qrs, 2), 3,
                      [](auto& v) { return v[0] * v[1] * v[2] + v[2] + v[1] + v[0]; }));
}

TEST_CASE("edge cases") {
  auto d = Domain::from_labels({"a", "b"});
  CHECK(interpolate(Relation::empty(d), 2).to_string() == "1");
  CHECK(interpolate(Relation::trivial(d), 2).is_zero());
  FieldPoly zero(2, d.points());
  std::vector<std::uint32_t> t{1, 0};
  CHECK(zero.eval(t) == 0);
  CHECK_THROWS_AS(interpolate(Relation::trivial(d), 4), InputError);
  CHECK_THROWS_AS(interpolate(Relation::trivial(d), 3), InputError);
}

TEST_CASE("elementary symmetric polynomials") {
  std::vector<Point> xs;
  for (std::uint32_t i = 1; i <= 8; ++i) xs.push_back({i, "x" + std::to_string(i)});
  CHECK(elementary_symmetric(0, xs).to_string() == "1");
  CHECK(elementary_symmetric(8, xs).term_count() == 1);
  CHECK(elementary_symmetric(3, xs).term_count() == 56);
  std::vector<Point> three(xs.begin(), xs.begin() + 3);
  CHECK(elementary_symmetric(2, three).to_string() == "x2*x3+x1*x3+x1*x2");
}

TEST_CASE("zero set fidelity on every elementary rule") {
  for (std::uint32_t n = 0; n < 256; ++n) {
    auto r = eca_relation(n);
    auto f = interpolate(r, 2);
    for (std::uint64_t i = 0; i < 16; ++i) {
      auto t = tuple_of(i, r.domain());
      CHECK((f.eval(t) == 0) == r.contains(i));
    }
    CHECK(interpolate(r, 2) == f);
  }
}

TEST_CASE("zero set fidelity over GF(3) and GF(5)") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {3u, 5u}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto d = Domain::from_labels({"a", "b", "c"}, p);
      auto r = oracle::random_relation(d, rng, 0.4);
      auto f = interpolate(r, p);
      for (std::uint64_t i = 0; i < d.volume(); ++i) CHECK((f.eval(tuple_of(i, d)) == 0) == r.contains(i));
      for (auto& [e, c] : f.terms()) {
        CHECK(c >= 1);
        CHECK(c < p);
        for (auto x : e) CHECK(x < p);
      }
    }
  }
}

TEST_CASE("Life polynomial") {
  auto r = life_relation();
  auto f = interpolate(r, 2);
  // x1..x8 neighbours (0..7), x9 centre (8), x10 next (9)
  CHECK(same_function(f, 10, [](auto& v) {
    return v[9] + v[8] * (e_k(v, 0, 8, 99, 7) + e_k(v, 0, 8, 99, 6) + e_k(v, 0, 8, 99, 3) + e_k(v, 0, 8, 99, 2)) +
           e_k(v, 0, 8, 99, 7) + e_k(v, 0, 8, 99, 3);
  }));
}

TEST_CASE("arithmetic") {
  std::vector<Point> v{{0, "x"}, {1, "y"}};
  auto x = FieldPoly::variable(3, v, 0), y = FieldPoly::variable(3, v, 1);
  auto f = (x + y) * (x + y) * (x + y);  // Frobenius: x^3 + y^3 = x + y on GF(3)
  CHECK(f == x + y);
  CHECK((x - x).is_zero());
  CHECK(x.scaled(3).is_zero());
}

}
