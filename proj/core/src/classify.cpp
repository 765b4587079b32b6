#include "centroflow/classify.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace centroflow {

namespace {

std::array<std::complex<double>, 3> chain_eigenvalues(const VertexInvariants& inv) {
  const Mat3 l = transition_matrix(inv);
  Eigen::EigenSolver<Mat3> solver(l, /*computeEigenvectors=*/false);
  std::array<std::complex<double>, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = solver.eigenvalues()[i];
  return out;
}

}  // namespace

ConstantClassification classify_constant(const VertexInvariants& inv,
                                         int max_period, const Tolerances& tol) {
  ConstantClassification result;
  result.eigenvalues = chain_eigenvalues(inv);

  const Mat3 l = transition_matrix(inv);
  Mat3 power = Mat3::Identity();
  int period = 0;
  for (int p = 1; p <= max_period; ++p) {
    power *= l;
    if ((power - Mat3::Identity()).cwiseAbs().maxCoeff() < tol.closure) {
      period = p;
      break;
    }
  }
  if (period < 3) return result;  // no closure, or degenerate period

  ClosureSpec spec;
  spec.kappa = inv.kappa;
  spec.kappa_bar = inv.kappa_bar;
  spec.tau = inv.tau;
  spec.period = period;
  spec.planar = std::abs(inv.tau) < tol.planarity;
  spec.eigenvalues = result.eigenvalues;

  // Rotation angle from the complex eigenvalue pair.
  double theta = 0.0;
  for (const auto& lambda : result.eigenvalues)
    if (lambda.imag() > 1e-12) theta = std::abs(std::arg(lambda));
  spec.theta = theta;
  spec.winding = static_cast<int>(
      std::lround(period * theta / (2.0 * std::numbers::pi)));

  if (std::abs(inv.kappa - 1.0) < tol.signature && spec.planar)
    spec.kind = spec.winding > 1 ? ConstantCurveKind::planar_self_intersecting
                                 : ConstantCurveKind::planar_regular;
  else
    spec.kind = ConstantCurveKind::space;

  result.closure = spec;
  return result;
}

Polygon generate_regular(int period, int winding) {
  if (period < 3 || winding < 1 || std::gcd(period, winding) != 1 ||
      2 * winding >= period)
    raise(ErrorCode::InvalidPeriod,
          "need p >= 3, gcd(p, l) = 1 and 2l < p for a regular polygon");
  const double theta = 2.0 * winding * std::numbers::pi / period;
  std::vector<Vec2> pts;
  pts.reserve(period);
  for (int k = 0; k < period; ++k)
    pts.emplace_back(std::cos(k * theta), std::sin(k * theta));
  return Polygon::closed2(pts);
}

Polygon generate_constant_space(int period, int winding) {
  if (period < 4 || period % 2 != 0 || winding < 1 ||
      std::gcd(period, winding) != 1 || 2 * winding >= period)
    raise(ErrorCode::InvalidPeriod,
          "need even p, gcd(p, l) = 1 and 2l < p for a constant space curve");
  const double theta = 2.0 * winding * std::numbers::pi / period;
  const double kappa_bar = 2.0 * (1.0 - std::cos(theta));
  VertexInvariants inv{-1.0, kappa_bar, -2.0 * kappa_bar};

  Signature sig;
  sig.cyclic = true;
  sig.entries.assign(period, inv);

  const auto seed =
      ReconstructionSeed::of3(Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1));
  return reconstruct(seed, sig, period - 3);
}

}  // namespace centroflow
