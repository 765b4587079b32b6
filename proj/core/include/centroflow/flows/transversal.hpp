#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "centroflow/flows/step.hpp"
#include "centroflow/invariants.hpp"
#include "centroflow/polygon.hpp"

namespace centroflow {

/// Transversal motion of a closed space polygon: each vertex moves along its
/// position vector, r'_k = beta_k r_k. All beta_k must be nonzero. The
/// returned prediction applies the invariant update
///
///   kappa'_n = (b_{n+2}/b_{n-1}) kappa_n
///   kappa'_n + kbar'_n = (b_{n+2}/b_n)(kappa_n + kbar_n)
///   1 + kbar'_n + tau'_n = (b_{n+2}/b_{n+1})(1 + kbar_n + tau_n)
///
/// and the step cross-checks it against direct recomputation.
FlowStep transversal_step(const Polygon& polygon, std::span<const double> betas,
                          const Tolerances& tol = {});

/// Signature prediction of the transversal step alone.
Signature transversal_prediction(const Signature& signature,
                                 std::span<const double> betas);

/// Planarity constraint system of a planar closed signature: the p x p
/// matrix S whose kernel contains the reciprocal coefficients 1/beta of every
/// planarity-preserving transversal motion, with rank p - 3, together with
/// the standardized nullspace basis. The basis columns are the coordinates
/// of the vertices mapped so that r_1, r_2, r_3 become the unit basis vectors
/// ("standard vector group"), which makes them centroaffine invariants.
struct PlanarityConstraint {
  Eigen::MatrixXd s;                 // p x p
  Eigen::MatrixXd nullspace_basis;   // p x 3, standardized vertex coordinates
  int numerical_rank = 0;
  int start_rotation = 0;  // rotation applied to pick a well-conditioned r_1,r_2,r_3
};

Eigen::MatrixXd planarity_constraint_matrix(const Signature& signature);

/// Builds S and the standardized basis; verifies rank(S) = p - 3 at the
/// numerical threshold p * eps * sigma_max (throws RankMismatch otherwise)
/// and that S annihilates each basis vector.
PlanarityConstraint planarity_constraint(const Signature& signature,
                                         const Polygon& positions,
                                         const Tolerances& tol = {});

/// Rule producing the three centroaffine-invariant combination scalars
/// (a_1, a_2, a_3) for a generation.
struct TransversalRecipe {
  std::string name;
  std::function<std::array<double, 3>(const Signature&)> coefficients;

  /// a_1 = mean kappa, a_2 = mean kbar, a_3 = (a_1 + a_2) / 2.
  static TransversalRecipe mean_curvatures();
  /// a_1 = a_2 = a_3 = c: constant betas, a stable step.
  static TransversalRecipe constant(double c);
};

/// Planarity-preserving betas: 1/beta_k = a_1 V1_k + a_2 V2_k + a_3 V3_k over
/// the standardized basis. Requires a planar cyclic signature with p >= 4.
/// Throws ZeroDenominator if any reciprocal vanishes.
std::vector<double> planarity_betas(const Signature& signature,
                                    const Polygon& positions,
                                    const TransversalRecipe& recipe,
                                    const Tolerances& tol = {});

}  // namespace centroflow
