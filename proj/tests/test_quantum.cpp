#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dds/amplitude.hpp"
#include "dds/automorphism.hpp"
#include "dds/cyclotomic.hpp"
#include "dds/errors.hpp"
#include "dds/local_quantum.hpp"

using namespace dds;

TEST_SUITE("quantum") {

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == IntPoly({-1, 1}));
  CHECK(cyclotomic_poly(2) == IntPoly({1, 1}));
  CHECK(cyclotomic_poly(4) == IntPoly({1, 0, 1}));
  CHECK(cyclotomic_poly(6) == IntPoly({1, -1, 1}));
  CHECK(cyclotomic_poly(12) == IntPoly({1, 0, -1, 0, 1}));
  for (std::uint32_t d = 1; d <= 60; ++d) CHECK(cyclotomic_poly(d).degree() == static_cast<long>(euler_phi(d)));
  // x^n - 1 is the product of Phi_d over d | n
  for (std::uint32_t n = 1; n <= 30; ++n) {
    IntPoly prod({1});
    for (std::uint32_t d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic_poly(d);
    CHECK(prod == IntPoly::monomial(1, n) - IntPoly({1}));
  }
  // Phi_105 is the first with a coefficient -2
  auto& p105 = cyclotomic_poly(105);
  CHECK(std::count(p105.coeffs().begin(), p105.coeffs().end(), -2) > 0);
}

TEST_CASE("cyclotomic factors") {
  CHECK(cyclotomic_factors(IntPoly({0, 3, 0, 3})) == std::vector<std::uint32_t>{4});
  CHECK(cyclotomic_factors(IntPoly({-1, 0, 1})) == std::vector<std::uint32_t>{1, 2});
  CHECK(cyclotomic_factors(IntPoly({5, 1, 7})).empty());  // roots off the unit circle
  CHECK_THROWS_AS(cyclotomic_factors(IntPoly()), InputError);
  // product of known factors is recovered
  auto p = cyclotomic_poly(3) * cyclotomic_poly(8) * IntPoly({2, 5});
  CHECK(cyclotomic_factors(p) == std::vector<std::uint32_t>{3, 8});
  IntPoly q;
  CHECK(p.divides_by(cyclotomic_poly(8), &q));
  CHECK(q * cyclotomic_poly(8) == p);
  CHECK_FALSE(p.divides_by(cyclotomic_poly(5)));
}

TEST_CASE("cyclotomic factors agree with root evaluation") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::int64_t> c(1 + rng() % 8);
    for (auto& x : c) x = static_cast<std::int64_t>(rng() % 7) - 3;
    IntPoly p(c);
    if (p.is_zero()) continue;
    auto f = cyclotomic_factors(p);
    for (std::uint32_t d = 1; d <= 40; ++d) {
      const bool exact = CycloElement::evaluate(p, d).is_zero();
      CHECK(exact == (std::find(f.begin(), f.end(), d) != f.end()));
    }
  }
}

TEST_CASE("overflow is reported") {
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2 + 1, 2), CapExceeded);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), CapExceeded);
}

TEST_CASE("ring arithmetic in Z[zeta_M]") {
  auto i = CycloElement::zeta_power(4, 1);
  CHECK(i * i == CycloElement::integer(4, -1));
  CHECK((i + CycloElement::integer(4, 2)).norm2().as_integer() == 5);
  auto z3 = CycloElement::zeta_power(3, 1);
  CHECK((z3 * z3 * z3) == CycloElement::integer(3, 1));
  CHECK((CycloElement::integer(3, 1) + z3 + z3 * z3).is_zero());
  CHECK_THROWS_AS(z3.as_integer(), InvariantViolation);
  CHECK(std::abs(z3.to_complex() - std::polar(1.0, 2 * std::numbers::pi / 3)) < 1e-12);
  std::mt19937_64 rng(4);
  for (std::uint32_t m : {5u, 8u, 12u}) {
    for (int t = 0; t < 20; ++t) {
      auto a = CycloElement::evaluate(IntPoly({static_cast<std::int64_t>(rng() % 9) - 4, static_cast<std::int64_t>(rng() % 9) - 4, 1}), m);
      auto b = CycloElement::evaluate(IntPoly({static_cast<std::int64_t>(rng() % 9) - 4, 3}), m, 3);
      CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9);
      CHECK(std::abs(a.norm2().to_complex() - std::norm(a.to_complex())) < 1e-9);
      CHECK(std::abs(a.conj().to_complex() - std::conj(a.to_complex())) < 1e-9);
    }
  }
}

TEST_CASE("free amplitudes") {
  CHECK(free_amplitude(1, 3) == IntPoly({0, 3, 0, 3}));
  CHECK(free_amplitude(-1, 3) == IntPoly({0, 3, 0, 3}));
  CHECK(free_amplitude(1, 3).to_string() == "3w+3w^3");
  CHECK(free_amplitude(0, 2) == IntPoly({1, 0, 2}));
  for (long t = 0; t <= 10; ++t) CHECK(free_amplitude(t, t) == IntPoly::monomial(1, static_cast<std::size_t>(t)));
  CHECK_THROWS_AS(free_amplitude(4, 3), InputError);
  CHECK(cyclotomic_factors(free_amplitude(1, 3)) == std::vector<std::uint32_t>{4});
}

TEST_CASE("formula equals path enumeration") {
  for (long t = 0; t <= 8; ++t)
    for (long x = -t; x <= t; ++x) CHECK(free_amplitude(x, t) == path_oracle(x, t));
  CHECK(path_oracle(0, 0) == IntPoly({1}));
  CHECK_THROWS_AS(path_oracle(0, 13), CapExceeded);
}

TEST_CASE("sum rule") {
  for (long t = 0; t <= 12; ++t) {
    std::int64_t total = 0;
    for (long x = -t; x <= t; ++x) total += free_amplitude(x, t).eval(1);
    CHECK(total == static_cast<std::int64_t>(std::pow(3, t)));
  }
}

TEST_CASE("two-source interference") {
  auto same = interference(parse_sources("-4:0,4:0"), 20, 4);
  auto opposite = interference(parse_sources("-4:0,4:2"), 20, 4);
  REQUIRE(same.size() == opposite.size());
  const std::size_t n = same.size();
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(same[i].x == -same[n - 1 - i].x);
    CHECK(same[i].amplitude.norm2() == same[n - 1 - i].amplitude.norm2());
    CHECK(same[i].exact_real);
    CHECK(opposite[i].exact_real);
  }
  auto mid = std::find_if(opposite.begin(), opposite.end(), [](auto& p) { return p.x == 0; });
  REQUIRE(mid != opposite.end());
  CHECK(mid->exact_zero);
  CHECK(mid->amplitude.is_zero());
  CHECK(mid->normalized == 0.0);
  double mx = 0;
  for (auto& p : same) mx = std::max(mx, p.normalized);
  CHECK(mx == 1.0);
  auto csv = interference_csv(opposite);
  CHECK(csv.rfind("x,probability\n-24,", 0) == 0);
  CHECK_THROWS_AS(parse_sources("1:2:3"), InputError);
  CHECK_THROWS_AS(parse_sources(""), InputError);
}

TEST_CASE("interference matches floating evaluation") {
  auto pts = interference(parse_sources("-3:1,2:0"), 9, 6);
  const auto z = std::polar(1.0, 2 * std::numbers::pi / 6);
  for (auto& p : pts) {
    std::complex<double> a = 0;
    for (auto [pos, ph] : {std::pair{-3L, 1L}, std::pair{2L, 0L}})
      if (std::abs(p.x - pos) <= 9) a += std::pow(z, ph) * free_amplitude(p.x - pos, 9).eval(z);
    CHECK(std::abs(std::norm(a) - p.magnitude2) < 1e-6 * std::max(1.0, p.magnitude2));
  }
}

TEST_CASE("local model on the buckyball") {
  auto g = graphs::buckyball();
  auto group = automorphisms(g);
  auto cls = arc_orbits(g, group);
  std::set<std::uint32_t> ids;
  for (auto& r : cls) ids.insert(r.begin(), r.end());
  REQUIRE(ids.size() == 2);
  const Poly2 v = Poly2::monomial(1, 1, 0), w = Poly2::monomial(1, 0, 1);
  auto m = LocalQuantumModel::from_classes(g, group, {v, w});
  // pentagon neighbours carry v, the hexagon-hexagon edge carries w
  CHECK(m.weight(0, 0) == v);
  CHECK(m.weight(0, 1) == v);
  CHECK(m.weight(0, 2) == w);
  CHECK(m.amplitude(0, 0, 0) == Poly2::monomial(1, 0, 0));
  CHECK(m.amplitude(0, 5, 0).is_zero());
  CHECK(m.amplitude(0, 0, 1) == Poly2::monomial(1, 0, 0));
  CHECK(m.amplitude(0, g.neighbors(0)[0], 1) == v);
  CHECK(m.amplitude(0, g.neighbors(0)[2], 1) == w);
  auto a2 = m.amplitude(0, 0, 2);
  CHECK(a2 == Poly2::monomial(1, 0, 0) + Poly2::monomial(2, 2, 0) + Poly2::monomial(1, 0, 2));
  CHECK(a2.to_string() == "2v^2+w^2+1");

  // orbit-constancy is enforced
  std::vector<std::vector<Poly2>> arcs(60);
  for (std::uint32_t x = 0; x < 60; ++x) arcs[x] = {v, v, w};
  CHECK_NOTHROW(LocalQuantumModel::from_arcs(g, group, arcs));
  arcs[7][2] = v;
  CHECK_THROWS_AS(LocalQuantumModel::from_arcs(g, group, arcs), InputError);
}

TEST_CASE("quantizing pairs") {
  // 1 + 2v^2 + w^2 vanishes at v = i, w = +-1
  auto a = Poly2::monomial(1, 0, 0) + Poly2::monomial(2, 2, 0) + Poly2::monomial(1, 0, 2);
  auto hits = quantizing_pairs(a, 6, 6);
  for (auto& h : hits) {
    const auto v = std::polar(1.0, 2 * std::numbers::pi / h.mv);
    const auto w = std::polar(1.0, 2 * std::numbers::pi * h.b / h.mw);
    CHECK(std::abs(1.0 + 2.0 * v * v + w * w) < 1e-9);
  }
  bool found = false;
  for (auto& h : hits) found = found || (h.mv == 4 && h.mw == 2);
  CHECK(found);
  SweepOptions opts;
  opts.workers = 5;
  auto par = quantizing_pairs(a, 6, 6, opts);
  REQUIRE(par.size() == hits.size());
  for (std::size_t i = 0; i < par.size(); ++i) CHECK((par[i].mv == hits[i].mv && par[i].mw == hits[i].mw && par[i].b == hits[i].b));
  // exhaustive float cross-check on a small grid
  for (std::uint32_t mv = 1; mv <= 6; ++mv)
    for (std::uint32_t mw = 1; mw <= 6; ++mw)
      for (std::uint32_t b = 1; b <= mw; ++b) {
        if (std::gcd(b, mw) != 1) continue;
        const auto v = std::polar(1.0, 2 * std::numbers::pi / mv);
        const auto w = std::polar(1.0, 2 * std::numbers::pi * b / mw);
        const bool zero = std::abs(1.0 + 2.0 * v * v + w * w) < 1e-9;
        bool listed = false;
        for (auto& h : hits) listed = listed || (h.mv == mv && h.mw == mw && h.b == b % mw);
        CHECK(zero == listed);
      }
}

}
