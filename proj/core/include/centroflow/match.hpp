#pragma once

#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "centroflow/invariants.hpp"
#include "centroflow/polygon.hpp"

namespace centroflow {

enum class MatchMode {
  affine2,        // 2D, x -> Ax + b with A 2x2 nonsingular
  centroaffine3,  // 3D, x -> Ax with A 3x3 nonsingular (no translation)
};

/// Recovered witness transform. For affine2 the 2x2 block of `linear` and the
/// first two components of `translation` are meaningful; centroaffine3 has
/// translation constrained to zero.
struct AffineMap {
  MatchMode mode = MatchMode::affine2;
  Mat3 linear = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  Vec3 apply(const Vec3& x) const { return linear * x + translation; }
  Polygon apply(const Polygon& polygon) const;
};

struct MatchReport {
  bool matched = false;
  int shift = 0;
  bool reversed = false;
  std::optional<AffineMap> transform;
  double signature_residual = 0.0;
  double geometric_residual = 0.0;
};

struct MatchOptions {
  bool search_reversal = false;   // also try Q with reversed vertex order
  double signature_tolerance = 1e-6;
  double geometric_tolerance = 1e-6;  // scaled by the polygon diameter
  double conditioning_limit = 1e8;    // exact-solve window conditioning
};

/// Max-norm distance between signatures of equal entry count, minimized over
/// cyclic shifts when `cyclic`; ties broken by the smallest shift. The shift
/// s aligns entry (i + s) of `a` with entry i of `b`.
std::pair<double, int> signature_distance(const Signature& a, const Signature& b,
                                          bool cyclic);

/// Signature-based equivalence detection: computes both signatures, searches
/// cyclic shifts (and optionally reversal) for agreement, and on a hit solves
/// for the witnessing transform from the best-conditioned consecutive vertex
/// window, refined by least squares over all correspondences, validating the
/// geometric residual. The best candidate is reported even when unmatched.
MatchReport match_polygons(const Polygon& p, const Polygon& q, MatchMode mode,
                           const MatchOptions& options = {},
                           const Tolerances& tol = {});

}  // namespace centroflow
