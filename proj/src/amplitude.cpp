#include "dds/amplitude.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "dds/errors.hpp"

namespace dds {

namespace {

std::int64_t binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (long i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

}  // namespace

IntPoly free_amplitude(long x, long t) {
  if (t < 0 || std::labs(x) > t) throw InputError("amplitude needs |x| <= t");
  std::vector<std::int64_t> c(t + 1, 0);
  for (long tau = std::labs(x); tau <= t; tau += 2)
    c[tau] = checked_mul(binom(tau, (tau + x) / 2), binom(t, tau));
  return IntPoly(std::move(c));
}

IntPoly path_oracle(long x, long t) {
  if (t < 0 || t > 12) throw CapExceeded("path oracle limited to t <= 12");
  std::vector<std::int64_t> c(t + 1, 0);
  long total = 1;
  for (long i = 0; i < t; ++i) total *= 3;
  for (long seq = 0; seq < total; ++seq) {
    long pos = 0, moves = 0, s = seq;
    for (long i = 0; i < t; ++i, s /= 3) {
      const long step = s % 3 - 1;
      pos += step;
      moves += step != 0;
    }
    if (pos == x) ++c[moves];
  }
  return IntPoly(std::move(c));
}

std::vector<InterferencePoint> interference(const std::vector<Source>& sources, long t, std::uint32_t m,
                                            const SweepOptions& opts) {
  if (sources.empty()) throw InputError("at least one source is required");
  if (m == 0) throw InputError("M must be positive");
  if (t < 0) throw InputError("time must be non-negative");
  long lo = sources[0].position, hi = lo;
  for (auto& s : sources) {
    lo = std::min(lo, s.position);
    hi = std::max(hi, s.position);
  }
  lo -= t;
  hi += t;
  std::vector<InterferencePoint> pts(static_cast<std::size_t>(hi - lo + 1));
  parallel_chunks(pts.size(), opts.workers, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    for (auto i = b; i < e; ++i) {
      auto& p = pts[i];
      p.x = lo + static_cast<long>(i);
      CycloElement acc(m);
      for (auto& s : sources) {
        const long d = p.x - s.position;
        if (std::labs(d) > t) continue;
        acc = acc + CycloElement::zeta_power(m, s.phase) * CycloElement::evaluate(free_amplitude(d, t), m);
      }
      p.amplitude = acc;
      p.exact_zero = acc.is_zero();
      const auto n2 = acc.norm2();
      try {
        p.exact_norm2 = n2.as_integer();
        p.exact_real = true;
        p.magnitude2 = static_cast<double>(p.exact_norm2);
      } catch (const InvariantViolation&) {
        p.magnitude2 = std::norm(acc.to_complex());
      }
    }
  });
  double mx = 0;
  for (auto& p : pts) mx = std::max(mx, p.magnitude2);
  for (auto& p : pts) p.normalized = mx > 0 ? p.magnitude2 / mx : 0;
  return pts;
}

std::string interference_csv(const std::vector<InterferencePoint>& pts) {
  std::string s = "x,probability\n";
  char buf[64];
  for (auto& p : pts) {
    std::snprintf(buf, sizeof buf, "%ld,%.12g\n", p.x, p.normalized);
    s += buf;
  }
  return s;
}

std::vector<Source> parse_sources(const std::string& text) {
  std::vector<Source> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("source must be position:phase");
    try {
      std::size_t used = 0;
      Source s;
      s.position = std::stol(item.substr(0, colon), &used);
      if (used != colon) throw InputError("bad source position");
      auto ph = item.substr(colon + 1);
      s.phase = std::stol(ph, &used);
      if (used != ph.size()) throw InputError("bad source phase");
      out.push_back(s);
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const InputError*>(&e)) throw;
      throw InputError("bad source '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("no sources given");
  return out;
}

}  // namespace dds
