#include "centroflow/flows/tangent.hpp"

#include <cmath>

#include "centroflow/chain.hpp"

namespace centroflow {

namespace {

// Column of the transfer matrix carrying r'_n in the frame (r_{n+1}, r_n, r_{n-1}).
Vec3 own_column(double alpha, double beta) {
  return Vec3(alpha, 1.0 - alpha + beta, -beta);
}

}  // namespace

Signature tangent_prediction(const Signature& signature,
                             const FlowCoefficients& coeffs,
                             const Tolerances& tol) {
  if (!signature.cyclic)
    raise(ErrorCode::InvalidArgument, "tangent prediction needs a cyclic signature");
  const int p = signature.size();
  if (static_cast<int>(coeffs.alphas.size()) != p ||
      static_cast<int>(coeffs.betas.size()) != p)
    raise(ErrorCode::SizeMismatch, "one (alpha, beta) pair per vertex required");

  const auto a = [&](int n) { return coeffs.alphas[wrap_index(n, p)]; };
  const auto b = [&](int n) { return coeffs.betas[wrap_index(n, p)]; };
  const auto inv = [&](int n) -> const VertexInvariants& {
    return signature.entries[wrap_index(n, p)];
  };

  Signature out = signature;
  for (int n = 0; n < p; ++n) {
    const VertexInvariants& cur = inv(n);
    const VertexInvariants& prev = inv(n - 1);
    const VertexInvariants& next = inv(n + 1);

    // Transfer matrix M_n: (r'_{n+1}, r'_n, r'_{n-1}) = (r_{n+1}, r_n, r_{n-1}) M_n,
    // assembled column by column from the chain and its inverse.
    Mat3 m;
    m.col(0) = transition_matrix(cur) * own_column(a(n + 1), b(n + 1));
    m.col(1) = own_column(a(n), b(n));
    m.col(2) = inverse_transition_matrix(prev, tol) * own_column(a(n - 1), b(n - 1));

    const double det = m.determinant();
    if (!std::isfinite(det) || std::abs(det) < tol.degeneracy_epsilon)
      raise(ErrorCode::SingularTransfer, "tangent transfer matrix singular", n);

    // First column of the next-generation chain matrix, transported through
    // the compatibility relation L_n M_{n+1} = M_n L'_n.
    const Vec3 v(1.0 + a(n + 2) * (next.tau + next.kappa_bar) + b(n + 2),
                 -b(n + 2) - a(n + 2) * (next.kappa + next.kappa_bar),
                 a(n + 2) * next.kappa);
    const Vec3 w = m.inverse() * (transition_matrix(cur) * v);

    VertexInvariants& nxt = out.entries[n];
    nxt.tau = w.sum() - 1.0;
    nxt.kappa_bar = -w[1] - w[2];
    nxt.kappa = w[2];
  }
  return out;
}

FlowStep tangent_step(const Polygon& polygon, const FlowCoefficients& coeffs,
                      const Tolerances& tol) {
  if (!polygon.closed() || polygon.dimension() != 3)
    raise(ErrorCode::Not3D, "tangent flow acts on closed space polygons");
  const int p = polygon.size();
  if (static_cast<int>(coeffs.alphas.size()) != p ||
      static_cast<int>(coeffs.betas.size()) != p)
    raise(ErrorCode::SizeMismatch, "one (alpha, beta) pair per vertex required");

  const Signature before = compute_signature(polygon, tol);
  const Signature predicted = tangent_prediction(before, coeffs, tol);

  std::vector<Vec3> pts;
  pts.reserve(p);
  for (int n = 0; n < p; ++n) {
    pts.push_back(coeffs.alphas[n] * polygon.vertex(n + 1) +
                  (1.0 - coeffs.alphas[n] + coeffs.betas[n]) * polygon.vertex(n) -
                  coeffs.betas[n] * polygon.vertex(n - 1));
  }
  Polygon next(3, std::move(pts), true);
  if (!is_admissible(next, tol))
    raise(ErrorCode::DegenerateResult, "tangent step lost admissibility");
  return {std::move(next), predicted};
}

Signature proportional_prediction(const Signature& signature, double alpha) {
  if (!signature.cyclic)
    raise(ErrorCode::InvalidArgument,
          "proportional prediction needs a cyclic signature");
  if (!(alpha > 0.0 && alpha < 1.0))
    raise(ErrorCode::InvalidArgument, "alpha must lie in (0, 1)");
  const int p = signature.size();
  const double a = alpha;

  std::vector<double> q(p);
  for (int n = 0; n < p; ++n) {
    const VertexInvariants& v = signature.entries[n];
    q[n] = (1 - a) * (1 - a) + a * (1 - a) * (1 - a) * v.tau +
           a * (1 - a) * v.kappa_bar + a * a * v.kappa;
  }

  Signature out = signature;
  for (int n = 0; n < p; ++n) {
    const VertexInvariants& cur = signature.entries[n];
    const VertexInvariants& next = signature.entries[wrap_index(n + 1, p)];
    const double ratio = q[wrap_index(n + 1, p)] / q[n];
    VertexInvariants& nxt = out.entries[n];
    nxt.kappa = cur.kappa * ratio;
    nxt.kappa_bar =
        (cur.kappa_bar + a / (1 - a) * cur.kappa) * ratio - a / (1 - a) * next.kappa;
    nxt.tau = (1 - a) * cur.tau * ratio + a * next.tau;
  }
  return out;
}

FlowStep proportional_step(const Polygon& polygon, double alpha,
                           const Tolerances& tol) {
  if (!polygon.closed())
    raise(ErrorCode::NotClosed, "proportional iteration acts on closed polygons");
  if (!(alpha > 0.0 && alpha < 1.0))
    raise(ErrorCode::InvalidArgument, "alpha must lie in (0, 1)");

  const Signature before = compute_signature(polygon, tol);
  const Signature predicted = proportional_prediction(before, alpha);

  const int p = polygon.size();
  std::vector<Vec3> pts;
  pts.reserve(p);
  for (int n = 0; n < p; ++n)
    pts.push_back((1.0 - alpha) * polygon.vertex(n) + alpha * polygon.vertex(n + 1));
  Polygon next(polygon.dimension(), std::move(pts), true);
  if (!is_admissible(next, tol))
    raise(ErrorCode::DegenerateResult, "proportional step collapsed to degeneracy");
  return {std::move(next), predicted};
}

}  // namespace centroflow
