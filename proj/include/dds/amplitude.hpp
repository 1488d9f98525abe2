#pragma once

// Path amplitudes of the free one-dimensional walk with steps {-1, 0, +1};
// each move carries the symbol w, a stay carries 1.

#include <cstdint>
#include <string>
#include <vector>

#include "dds/cyclotomic.hpp"
#include "dds/parallel.hpp"

namespace dds {

// sum over tau = |x|, |x|+2, ..., <= t of C(tau, (tau+x)/2) C(t, tau) w^tau
IntPoly free_amplitude(long x, long t);

// Enumerates all 3^t step sequences; t <= 12.
IntPoly path_oracle(long x, long t);

struct Source {
  long position = 0;
  long phase = 0;  // multiples of 2*pi/M
};

struct InterferencePoint {
  long x = 0;
  CycloElement amplitude{1};
  std::int64_t exact_norm2 = 0;   // valid when exact_real
  bool exact_real = false;        // |amplitude|^2 happened to lie in Z
  bool exact_zero = false;
  double magnitude2 = 0;          // |amplitude|^2 as a float
  double normalized = 0;          // magnitude2 / max over x
};

// Sum of sources zeta^phase * A_{x - position}^t(zeta), zeta a primitive
// M-th root of unity, for every x reachable from some source.
std::vector<InterferencePoint> interference(const std::vector<Source>& sources, long t, std::uint32_t m,
                                            const SweepOptions& opts = {});

std::string interference_csv(const std::vector<InterferencePoint>& pts);

// Parse "-4:0,4:2".
std::vector<Source> parse_sources(const std::string& text);

}  // namespace dds
