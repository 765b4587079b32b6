#pragma once

#include "centroflow/polygon.hpp"

namespace centroflow {

/// Endpoint iteration of a closed space p-gon with 0 < c < 1: every vertex
/// but the last moves to the proportional division point of its forward edge,
/// while the last vertex follows its own rule,
///
///   r'_i = (1-c) r_i + c r_{i+1}   (i = 0..p-2),
///   r'_{p-1} = c (r_0 + r_{p-1}).
///
/// Iterated, the signature converges to a limit depending only on c.
/// `convex_last_vertex` switches the last vertex to the convex combination
/// (1-c) r_{p-1} + c r_0 instead (which makes the map the plain proportional
/// division); off by default.
Polygon endpoint_flow_step(const Polygon& polygon, double c,
                           bool convex_last_vertex = false,
                           const Tolerances& tol = {});

}  // namespace centroflow
