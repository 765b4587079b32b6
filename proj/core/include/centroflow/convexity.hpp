#pragma once

#include <vector>

#include "centroflow/invariants.hpp"
#include "centroflow/polygon.hpp"

namespace centroflow {

struct ConvexityReport {
  bool is_simple = false;
  bool is_convex = false;
  bool is_parallelogram = false;

  // Convex p-gon diagnostics (p > 3, non-parallelogram): every kbar > -1,
  // at most two kbar <= 0, and any two non-positive ones adjacent.
  bool kappa_bar_above_minus_one = false;
  std::vector<int> nonpositive_kappa_bar;
  bool nonpositive_kappa_bar_adjacent = false;

  std::vector<int> negative_kappa;
};

/// Convexity test for a closed 2D polygon: simple (no self-intersection over
/// one period, pairwise edge test) and all first curvatures positive.
ConvexityReport convexity_check(const Polygon& polygon, const Tolerances& tol = {});

/// Proper or touching intersection of segments [a0,a1] and [b0,b1]. Shared
/// endpoints count as intersections; the caller exempts adjacent edges.
bool segments_intersect(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                        const Vec2& b1, double tol);

}  // namespace centroflow
