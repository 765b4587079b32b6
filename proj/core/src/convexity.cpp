#include "centroflow/convexity.hpp"

#include <algorithm>
#include <cmath>

namespace centroflow {

namespace {

// Orientation of c relative to segment (a, b): sign of the cross product,
// 0 within tolerance.
int orientation(const Vec2& a, const Vec2& b, const Vec2& c, double tol) {
  const double cross = det2(b - a, c - a);
  if (cross > tol) return 1;
  if (cross < -tol) return -1;
  return 0;
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p, double tol) {
  return p.x() <= std::max(a.x(), b.x()) + tol &&
         p.x() >= std::min(a.x(), b.x()) - tol &&
         p.y() <= std::max(a.y(), b.y()) + tol &&
         p.y() >= std::min(a.y(), b.y()) - tol;
}

}  // namespace

bool segments_intersect(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                        const Vec2& b1, double tol) {
  const int o1 = orientation(a0, a1, b0, tol);
  const int o2 = orientation(a0, a1, b1, tol);
  const int o3 = orientation(b0, b1, a0, tol);
  const int o4 = orientation(b0, b1, a1, tol);

  if (o1 != o2 && o3 != o4) return true;

  // Collinear/touching fallbacks.
  if (o1 == 0 && on_segment(a0, a1, b0, tol)) return true;
  if (o2 == 0 && on_segment(a0, a1, b1, tol)) return true;
  if (o3 == 0 && on_segment(b0, b1, a0, tol)) return true;
  if (o4 == 0 && on_segment(b0, b1, a1, tol)) return true;
  return false;
}

ConvexityReport convexity_check(const Polygon& polygon, const Tolerances& tol) {
  if (!polygon.closed())
    raise(ErrorCode::NotClosed, "convexity test needs a closed polygon");
  if (polygon.dimension() != 2)
    raise(ErrorCode::Not2D, "convexity test needs a 2D polygon");

  const int p = polygon.size();
  const double scale = polygon.coordinate_scale();
  const double area_tol = tol.degeneracy_epsilon * std::max(1.0, scale * scale);

  ConvexityReport report;

  // Pairwise edge test; adjacent edges share an endpoint and are exempt.
  report.is_simple = true;
  for (int i = 0; i < p && report.is_simple; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (j == i + 1 || (i == 0 && j == p - 1)) continue;
      if (segments_intersect(polygon.vertex2(i), polygon.vertex2(i + 1),
                             polygon.vertex2(j), polygon.vertex2(j + 1),
                             area_tol)) {
        report.is_simple = false;
        break;
      }
    }
  }

  const Signature sig = compute_signature(polygon, tol);
  for (int k = 0; k < p; ++k)
    if (sig.entries[k].kappa <= 0.0) report.negative_kappa.push_back(k);
  report.is_convex = report.is_simple && report.negative_kappa.empty();

  report.is_parallelogram =
      p == 4 && (polygon.edge2(0) + polygon.edge2(2)).norm() <
                    tol.signature * std::max(1.0, scale) &&
      (polygon.edge2(1) + polygon.edge2(3)).norm() <
          tol.signature * std::max(1.0, scale);

  // Convex p-gon diagnostics (p > 3, non-parallelogram).
  report.kappa_bar_above_minus_one = true;
  for (int k = 0; k < p; ++k) {
    const double kb = sig.entries[k].kappa_bar;
    if (kb <= -1.0) report.kappa_bar_above_minus_one = false;
    if (kb <= 0.0) report.nonpositive_kappa_bar.push_back(k);
  }
  report.nonpositive_kappa_bar_adjacent = true;
  if (report.nonpositive_kappa_bar.size() > 2) {
    report.nonpositive_kappa_bar_adjacent = false;
  } else if (report.nonpositive_kappa_bar.size() == 2) {
    const int a = report.nonpositive_kappa_bar[0];
    const int b = report.nonpositive_kappa_bar[1];
    const int gap = std::min(b - a, p - (b - a));
    report.nonpositive_kappa_bar_adjacent = gap <= 1;
  }
  return report;
}

}  // namespace centroflow
