#include "centroflow/flows/transversal.hpp"

#include <cmath>
#include <numeric>

#include <Eigen/SVD>

#include "centroflow/chain.hpp"

namespace centroflow {

Signature transversal_prediction(const Signature& signature,
                                 std::span<const double> betas) {
  if (!signature.cyclic)
    raise(ErrorCode::InvalidArgument, "transversal prediction needs a cyclic signature");
  const int p = signature.size();
  if (static_cast<int>(betas.size()) != p)
    raise(ErrorCode::SizeMismatch, "one beta per vertex required");

  Signature out = signature;
  for (int n = 0; n < p; ++n) {
    const VertexInvariants& cur = signature.entries[n];
    const double b_next2 = betas[wrap_index(n + 2, p)];
    const double b_next = betas[wrap_index(n + 1, p)];
    const double b_here = betas[n];
    const double b_prev = betas[wrap_index(n - 1, p)];

    VertexInvariants& nxt = out.entries[n];
    nxt.kappa = (b_next2 / b_prev) * cur.kappa;
    nxt.kappa_bar = (b_next2 / b_here) * (cur.kappa + cur.kappa_bar) - nxt.kappa;
    nxt.tau = (b_next2 / b_next) * (1.0 + cur.kappa_bar + cur.tau) - 1.0 -
              nxt.kappa_bar;
  }
  return out;
}

FlowStep transversal_step(const Polygon& polygon, std::span<const double> betas,
                          const Tolerances& tol) {
  if (!polygon.closed() || polygon.dimension() != 3)
    raise(ErrorCode::Not3D, "transversal flow acts on closed space polygons");
  const int p = polygon.size();
  if (static_cast<int>(betas.size()) != p)
    raise(ErrorCode::SizeMismatch, "one beta per vertex required");
  for (int k = 0; k < p; ++k)
    if (betas[k] == 0.0 || !std::isfinite(betas[k]))
      raise(ErrorCode::ZeroBeta, "transversal coefficient must be nonzero", k);

  const Signature before = compute_signature(polygon, tol);

  std::vector<Vec3> pts;
  pts.reserve(p);
  for (int k = 0; k < p; ++k) pts.push_back(betas[k] * polygon.vertex(k));
  Polygon next(3, std::move(pts), true);

  if (!is_admissible(next, tol))
    raise(ErrorCode::DegenerateResult, "scaled polygon lost admissibility");

  return {std::move(next), transversal_prediction(before, betas)};
}

Eigen::MatrixXd planarity_constraint_matrix(const Signature& signature) {
  if (!signature.cyclic)
    raise(ErrorCode::InvalidArgument, "planarity system needs a cyclic signature");
  const int p = signature.size();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(p, p);
  for (int n = 0; n < p; ++n) {
    const VertexInvariants& inv = signature.entries[n];
    s(n, n) += -(inv.kappa + inv.kappa_bar);
    s(n, wrap_index(n + 1, p)) += 1.0 + inv.kappa_bar;
    s(n, wrap_index(n + 2, p)) += -1.0;
    s(n, wrap_index(n - 1, p)) += inv.kappa;
  }
  return s;
}

namespace {

// Standardize on r_1, r_2, r_3; rotate the start only when that triple is
// too close to degenerate to invert.
int standardization_rotation(const Polygon& positions, const Tolerances& tol) {
  const int p = positions.size();
  const double scale = std::max(1.0, positions.coordinate_scale());
  const double floor = 1e3 * tol.degeneracy_epsilon * scale * scale * scale;
  if (std::abs(det3(positions.vertex(0), positions.vertex(1),
                    positions.vertex(2))) > floor)
    return 0;
  int best = 0;
  double best_det = -1.0;
  for (int k = 0; k < p; ++k) {
    const double d = std::abs(
        det3(positions.vertex(k), positions.vertex(k + 1), positions.vertex(k + 2)));
    if (d > best_det) {
      best_det = d;
      best = k;
    }
  }
  return best;
}

}  // namespace

PlanarityConstraint planarity_constraint(const Signature& signature,
                                         const Polygon& positions,
                                         const Tolerances& tol) {
  if (!signature.cyclic || !positions.closed())
    raise(ErrorCode::NotClosed, "planarity system needs closed input");
  if (positions.dimension() != 3)
    raise(ErrorCode::Not3D, "planarity system needs space positions");
  const int p = signature.size();
  if (positions.size() != p)
    raise(ErrorCode::SizeMismatch, "signature and positions disagree");
  if (p < 4)
    raise(ErrorCode::TooFewVertices, "planarity system needs p >= 4");
  if (!is_planar(signature, tol))
    raise(ErrorCode::NotPlanar, "planarity system needs tau = 0");

  PlanarityConstraint out;
  out.s = planarity_constraint_matrix(signature);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(out.s);
  const auto& sv = svd.singularValues();
  // The entries of S come from computed invariants, so its nominally zero
  // singular values sit near 40 eps * sigma_max rather than eps * sigma_max;
  // the genuine ones stay above 1e-3 * sigma_max. The factor 256 p splits
  // those regimes with orders of magnitude to spare on both sides.
  const double rank_threshold =
      256.0 * p * std::numeric_limits<double>::epsilon() * sv(0);
  out.numerical_rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rank_threshold) ++out.numerical_rank;
  if (out.numerical_rank != p - 3)
    raise(ErrorCode::RankMismatch,
          "planarity matrix rank " + std::to_string(out.numerical_rank) +
              ", expected p - 3 = " + std::to_string(p - 3));

  // Standard vector group: map r_1, r_2, r_3 to the unit basis vectors; the
  // standardized coordinates are centroaffine invariants and span ker S.
  out.start_rotation = standardization_rotation(positions, tol);
  Mat3 frame;
  frame.col(0) = positions.vertex(out.start_rotation);
  frame.col(1) = positions.vertex(out.start_rotation + 1);
  frame.col(2) = positions.vertex(out.start_rotation + 2);
  const Mat3 to_standard = frame.inverse();

  out.nullspace_basis.resize(p, 3);
  for (int i = 0; i < p; ++i)
    out.nullspace_basis.row(i) = (to_standard * positions.vertex(i)).transpose();

  const double residual = (out.s * out.nullspace_basis).cwiseAbs().maxCoeff();
  const double residual_scale = std::max(1.0, out.s.cwiseAbs().maxCoeff()) *
                                std::max(1.0, out.nullspace_basis.cwiseAbs().maxCoeff());
  if (residual > 1e-9 * residual_scale)
    raise(ErrorCode::RankMismatch,
          "standardized basis fails S * V = 0; input not planar enough");
  return out;
}

TransversalRecipe TransversalRecipe::mean_curvatures() {
  TransversalRecipe r;
  r.name = "mean";
  r.coefficients = [](const Signature& sig) -> std::array<double, 3> {
    const int p = sig.size();
    double a1 = 0.0;
    double a2 = 0.0;
    for (const auto& v : sig.entries) {
      a1 += v.kappa;
      a2 += v.kappa_bar;
    }
    a1 /= p;
    a2 /= p;
    return {a1, a2, 0.5 * (a1 + a2)};
  };
  return r;
}

TransversalRecipe TransversalRecipe::constant(double c) {
  TransversalRecipe r;
  r.name = "constant";
  r.coefficients = [c](const Signature&) -> std::array<double, 3> {
    return {c, c, c};
  };
  return r;
}

std::vector<double> planarity_betas(const Signature& signature,
                                    const Polygon& positions,
                                    const TransversalRecipe& recipe,
                                    const Tolerances& tol) {
  const PlanarityConstraint constraint = planarity_constraint(signature, positions, tol);
  const std::array<double, 3> a = recipe.coefficients(signature);

  const int p = signature.size();
  std::vector<double> betas(p);
  for (int i = 0; i < p; ++i) {
    const double reciprocal = a[0] * constraint.nullspace_basis(i, 0) +
                              a[1] * constraint.nullspace_basis(i, 1) +
                              a[2] * constraint.nullspace_basis(i, 2);
    if (std::abs(reciprocal) < tol.degeneracy_epsilon)
      raise(ErrorCode::ZeroDenominator,
            "recipe produced a vanishing reciprocal beta", i);
    betas[i] = 1.0 / reciprocal;
  }
  return betas;
}

}  // namespace centroflow
