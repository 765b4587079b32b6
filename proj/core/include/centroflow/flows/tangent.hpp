#pragma once

#include <span>
#include <vector>

#include "centroflow/flows/step.hpp"
#include "centroflow/invariants.hpp"
#include "centroflow/polygon.hpp"

namespace centroflow {

/// Per-vertex coefficients of the tangent flow
///   r'_k = r_k + alpha_k t_k + beta_k t_{k-1}.
struct FlowCoefficients {
  std::vector<double> alphas;
  std::vector<double> betas;
};

/// Tangent motion of a closed space polygon. The prediction builds, per
/// vertex, the literal transfer matrix M_n of the frame update
/// (r'_{n+1}, r'_n, r'_{n-1}) = (r_{n+1}, r_n, r_{n-1}) M_n, inverts it
/// numerically and applies the compatibility relation with the chain; no
/// symbolic simplification. Throws SingularTransfer when M_n is singular.
/// Planar curves stay planar: tau = 0 implies tau' = 0.
FlowStep tangent_step(const Polygon& polygon, const FlowCoefficients& coeffs,
                      const Tolerances& tol = {});

Signature tangent_prediction(const Signature& signature,
                             const FlowCoefficients& coeffs,
                             const Tolerances& tol = {});

/// Definite-proportional-division iteration r'_k = (1-alpha) r_k
/// + alpha r_{k+1} with alpha in (0,1), the tangent flow with alpha_k = alpha,
/// beta_k = 0. Prediction uses the closed forms built on
///   q_k = (1-a)^2 + a(1-a)^2 tau_k + a(1-a) kbar_k + a^2 kappa_k :
///   kappa'_n = kappa_n q_{n+1}/q_n
///   kbar'_n  = (kbar_n + a/(1-a) kappa_n) q_{n+1}/q_n - a/(1-a) kappa_{n+1}
///   tau'_n   = (1-a) tau_n q_{n+1}/q_n + a tau_{n+1}.
/// Works for 2D and 3D closed polygons.
FlowStep proportional_step(const Polygon& polygon, double alpha,
                           const Tolerances& tol = {});

Signature proportional_prediction(const Signature& signature, double alpha);

}  // namespace centroflow
