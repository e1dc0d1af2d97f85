#pragma once

// Timing of the shadow algorithms on a fixed family of test elements.

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "coxshadow/coxeter.hpp"
#include "coxshadow/orientation.hpp"
#include "coxshadow/shadow.hpp"

namespace coxshadow {

/// A reduced word of the given length, built greedily by cycling through the
/// generators 0, 1, ..., r and keeping each letter that increases the length.
inline GroupElement bench_element(const CoxeterDatum& datum, int length) {
  GroupElement x = datum.identity();
  const auto& gens = datum.generators();
  int current = 0;
  for (std::size_t i = 0; current < length; ++i) {
    if (i > gens.size() * static_cast<std::size_t>(length + 1) * 4)
      throw Error(Errc::Exceeded, "no reduced word of length " + std::to_string(length));
    GroupElement y = x * datum.generator(gens[i % gens.size()]);
    if (datum.length(y) == current + 1) {
      x = std::move(y);
      ++current;
    }
  }
  return x;
}

struct BenchRow {
  Algorithm algorithm;
  int length = 0;
  double median_ms = 0.0;
  std::size_t shadow_size = 0;
  std::uint64_t operations = 0;
};

/// The direction with the largest regular shadow of x (first in canonical
/// order on ties).
inline Direction widest_direction(const CoxeterDatum& datum, const GroupElement& x) {
  const auto all = shadow_R(datum, x);
  std::size_t best = 0;
  for (std::size_t i = 1; i < all.shadows.size(); ++i) {
    if (all.shadows[i].size() > all.shadows[best].size()) best = i;
  }
  return all.directions[best];
}

/// Median wall time over `repeats` runs of one algorithm on x towards dir.
/// R computes all directions in each run.
inline BenchRow bench_algorithm(const CoxeterDatum& datum, Algorithm alg, const GroupElement& x,
                                const Direction& dir, int repeats, const ShadowLimits& limits = {}) {
  const Orientation phi = Orientation::weyl_chamber(dir);
  BenchRow row{alg, datum.length(x)};
  std::vector<double> times;
  for (int i = 0; i < std::max(1, repeats); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    ShadowSet s;
    switch (alg) {
      case Algorithm::L: s = shadow_L(datum, x, dir); break;
      case Algorithm::R: {
        auto all = shadow_R(datum, x);
        s = all.at(dir);
        s.operations = all.operations;
        break;
      }
      case Algorithm::Naive: s = shadow_naive(datum, x, phi, std::nullopt, limits); break;
      case Algorithm::NaiveBounded: s = shadow_naive(datum, x, phi, datum.longest_length(), limits); break;
      case Algorithm::Partial: s = partial_shadow(datum, x, dir, datum.spherical_projection(x)); break;
    }
    times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    row.shadow_size = s.size();
    row.operations = s.operations;
  }
  std::sort(times.begin(), times.end());
  row.median_ms = times[times.size() / 2];
  return row;
}

}  // namespace coxshadow
