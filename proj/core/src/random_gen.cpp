#include "centroflow/random_gen.hpp"

#include <cmath>
#include <numbers>

#include "centroflow/convexity.hpp"
#include "centroflow/invariants.hpp"

namespace centroflow {

namespace {

bool admissible_with_margin(const Polygon& polygon, double margin) {
  const double scale = std::max(1.0, polygon.coordinate_scale());
  const double floor2 = margin * scale * scale;
  const double floor3 = margin * scale * scale * scale;
  const int n = polygon.size();
  const int lo = polygon.closed() ? 0 : 1;
  const int hi = polygon.closed() ? n - 1 : n - 2;
  for (int k = lo; k <= hi; ++k) {
    if (polygon.dimension() == 2) {
      if (std::abs(det2(polygon.edge2(k - 1), polygon.edge2(k))) < floor2)
        return false;
    } else {
      if (std::abs(det3(polygon.vertex(k - 1), polygon.vertex(k),
                        polygon.vertex(k + 1))) < floor3)
        return false;
    }
  }
  return true;
}

}  // namespace

Polygon random_admissible_polygon(Rng& rng, int dimension, int count, bool closed,
                                  double margin, int retry_cap) {
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    std::vector<Vec3> pts(count, Vec3::Zero());
    for (auto& p : pts)
      for (int j = 0; j < dimension; ++j) p[j] = rng.uniform(-10.0, 10.0);
    Polygon candidate(dimension, std::move(pts), closed);
    if (admissible_with_margin(candidate, margin)) return candidate;
  }
  raise(ErrorCode::DegenerateResult,
        "failed to sample an admissible polygon within the retry cap");
}

Polygon random_convex_polygon(Rng& rng, int count, int retry_cap) {
  const double step = 2.0 * std::numbers::pi / count;
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    // Perturbed regular polygon through a random affine map: convexity is
    // affine, so the image stays convex whenever the perturbed base is.
    std::vector<Vec2> base(count);
    for (int k = 0; k < count; ++k) {
      const double angle = k * step + rng.uniform(-0.25, 0.25) * step;
      const double radius = rng.uniform(0.85, 1.15);
      base[k] = radius * Vec2(std::cos(angle), std::sin(angle));
    }
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    Mat2 rot;
    rot << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    Mat2 stretch = Mat2::Identity();
    stretch(0, 0) = rng.uniform(0.5, 2.0);
    stretch(1, 1) = rng.uniform(0.5, 2.0);
    stretch(0, 1) = rng.uniform(-0.5, 0.5);
    const Mat2 a = rot * stretch;
    const Vec2 b(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0));

    Polygon candidate = Polygon::closed2(base).transformed2(a, b);
    if (!admissible_with_margin(candidate, 1e-4)) continue;
    const ConvexityReport report = convexity_check(candidate);
    if (report.is_convex) return candidate;
  }
  raise(ErrorCode::DegenerateResult,
        "failed to sample a convex polygon within the retry cap");
}

Polygon random_parallel_opposite_polygon(Rng& rng, int half_count) {
  if (half_count < 3)
    raise(ErrorCode::InvalidArgument, "need at least 3 edge directions");
  // Edge directions strictly increasing over less than half a turn; the
  // second half repeats them negated, so opposite sides are parallel with
  // equal length, the edge sum vanishes and the total turning is one full
  // turn (convex).
  std::vector<double> increments(half_count);
  double total = 0.0;
  for (auto& d : increments) {
    d = rng.uniform(0.3, 1.0);
    total += d;
  }
  const double span = std::numbers::pi * rng.uniform(0.8, 0.95);
  const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);

  std::vector<Vec2> edges(half_count);
  double angle = phase;
  for (int i = 0; i < half_count; ++i) {
    edges[i] = rng.uniform(0.5, 2.0) * Vec2(std::cos(angle), std::sin(angle));
    angle += increments[i] / total * span;
  }

  std::vector<Vec2> pts;
  pts.reserve(2 * half_count);
  Vec2 cursor(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
  for (int i = 0; i < 2 * half_count; ++i) {
    pts.push_back(cursor);
    cursor += (i < half_count) ? edges[i] : Vec2(-edges[i - half_count]);
  }
  return Polygon::closed2(pts);
}

Polygon random_planar_closed_polygon3(Rng& rng, int count, int retry_cap) {
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    const Polygon flat = random_admissible_polygon(rng, 2, count, true, 1e-3,
                                                   retry_cap);
    // Embed in a random plane kept away from the origin.
    Vec3 origin(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(4.0, 8.0));
    Vec3 u(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-0.2, 0.2));
    Vec3 v(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-0.2, 0.2));
    if (u.cross(v).norm() < 0.2) continue;

    std::vector<Vec3> pts;
    pts.reserve(count);
    for (int k = 0; k < count; ++k) {
      const Vec2 q = flat.vertex2(k);
      pts.push_back(origin + q.x() * u + q.y() * v);
    }
    Polygon candidate(3, std::move(pts), true);
    if (admissible_with_margin(candidate, 1e-4)) return candidate;
  }
  raise(ErrorCode::DegenerateResult,
        "failed to sample a planar space polygon within the retry cap");
}

}  // namespace centroflow
