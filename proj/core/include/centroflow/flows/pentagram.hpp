#pragma once

#include "centroflow/flows/step.hpp"
#include "centroflow/invariants.hpp"
#include "centroflow/polygon.hpp"

namespace centroflow {

/// Division ratios of the pentagram maps. Forward map:
///   lambda_k = 1 / (1 + kappa_k + kbar_k),
///   lambda_bar_k = (1 + kbar_k) / (1 + kappa_k + kbar_k),
/// both in (0,1) for convex input. Inverse map:
///   lambda_k = kappa_k / kbar_k,   mu_k = -1 / kbar_k.
struct PentagramRatios {
  double lambda = 0.0;
  double lambda_bar = 0.0;
  double mu = 0.0;
};

PentagramRatios pentagram_ratios(const VertexInvariants& inv,
                                 const Tolerances& tol = {});
PentagramRatios inverse_pentagram_ratios(const VertexInvariants& inv,
                                         const Tolerances& tol = {});

/// Pentagram map of a convex closed planar polygon: vertex k of the image is
/// the intersection of the consecutive shortest diagonals (r_{k-2}, r_k) and
/// (r_{k-1}, r_{k+1}),
///
///   r'_k = r_{k-1} + lambda_{k-1} (r_{k+1} - r_{k-1}).
///
/// Vertex labels are chosen so that inverse_pentagram_step composes with this
/// map to the identity. Requires p >= 5, simple, convex (all kappa > 0).
/// The image satisfies kbar' > 0.
FlowStep pentagram_step(const Polygon& polygon, const Tolerances& tol = {});

Signature pentagram_prediction(const Signature& signature,
                               const Tolerances& tol = {});

struct InversePentagramStep {
  Polygon polygon;
  Signature predicted;
  /// Set when some kbar_k <= 0: the image of a convex polygon is then not
  /// guaranteed convex.
  bool convexity_warning = false;
};

/// Inverse pentagram map: r'_k = r_k + (kappa_k / kbar_k) t_{k-1}, the
/// intersection of the extended edges (r_{k-1}, r_k) and (r_{k+1}, r_{k+2}).
/// Requires a convex closed polygon with every kbar_k != 0.
InversePentagramStep inverse_pentagram_step(const Polygon& polygon,
                                            const Tolerances& tol = {});

Signature inverse_pentagram_prediction(const Signature& signature,
                                       const Tolerances& tol = {});

}  // namespace centroflow
