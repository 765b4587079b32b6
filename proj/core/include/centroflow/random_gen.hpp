#pragma once

#include <cstdint>
#include <random>

#include "centroflow/polygon.hpp"

namespace centroflow {

/// Deterministic generator for experiment inputs. All randomized CLI paths
/// and tests draw from this with an explicit seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random admissible polygon in a bounded box, rejection-sampled until every
/// denominator determinant clears `margin` times the box scale (keeps chain
/// products and determinant ratios well conditioned). Throws after
/// `retry_cap` failed attempts.
Polygon random_admissible_polygon(Rng& rng, int dimension, int count,
                                  bool closed = true, double margin = 1e-3,
                                  int retry_cap = 10000);

/// Random convex closed 2D polygon: a perturbed affinely-mapped regular
/// p-gon, resampled until convexity_check passes.
Polygon random_convex_polygon(Rng& rng, int count, int retry_cap = 10000);

/// Random convex 2D polygon with parallel equi-length opposite sides
/// (2*half_count vertices): edge directions sweep half a turn, second half
/// repeats them negated.
Polygon random_parallel_opposite_polygon(Rng& rng, int half_count);

/// Random closed polygon embedded in a plane not through the origin:
/// admissible as a space curve with tau identically zero.
Polygon random_planar_closed_polygon3(Rng& rng, int count, int retry_cap = 10000);

}  // namespace centroflow
