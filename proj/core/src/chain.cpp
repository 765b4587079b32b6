#include "centroflow/chain.hpp"

#include <cmath>

namespace centroflow {

Mat3 transition_matrix(const VertexInvariants& inv) {
  Mat3 l;
  l << 1.0 + inv.kappa_bar + inv.tau, 1.0, 0.0,
       -inv.kappa - inv.kappa_bar,    0.0, 1.0,
       inv.kappa,                     0.0, 0.0;
  return l;
}

Mat3 inverse_transition_matrix(const VertexInvariants& inv, const Tolerances& tol) {
  if (std::abs(inv.kappa) < tol.degeneracy_epsilon)
    raise(ErrorCode::SingularChain, "chain inverse needs kappa != 0");
  const double k = inv.kappa;
  Mat3 l;
  l << 0.0, 0.0, 1.0 / k,
       1.0, 0.0, -(1.0 + inv.kappa_bar + inv.tau) / k,
       0.0, 1.0, (k + inv.kappa_bar) / k;
  return l;
}

Mat3 chain_product(const Signature& signature) {
  Mat3 product = Mat3::Identity();
  for (const auto& inv : signature.entries) product *= transition_matrix(inv);
  return product;
}

ClosureReport closure_check(const Signature& signature, const Tolerances& tol) {
  if (!signature.cyclic)
    raise(ErrorCode::InvalidArgument, "closure check needs a cyclic signature");
  ClosureReport report;
  const Mat3 product = chain_product(signature);
  report.matrix_product_defect = (product - Mat3::Identity()).cwiseAbs().maxCoeff();
  report.is_closed = report.matrix_product_defect < tol.closure;

  report.kappa_product = 1.0;
  for (const auto& inv : signature.entries) report.kappa_product *= inv.kappa;

  // Constant space invariants close centrosymmetrically about the origin
  // when the half-period chain power is -E (equivalently r_{k+p/2} = -r_k).
  const int p = signature.size();
  if (report.is_closed && p >= 2 && p % 2 == 0) {
    bool constant = true;
    const VertexInvariants& f = signature.entries.front();
    for (const auto& inv : signature.entries) {
      if (std::abs(inv.kappa - f.kappa) > tol.signature ||
          std::abs(inv.kappa_bar - f.kappa_bar) > tol.signature ||
          std::abs(inv.tau - f.tau) > tol.signature) {
        constant = false;
        break;
      }
    }
    if (constant && std::abs(f.kappa + 1.0) < tol.signature &&
        std::abs(f.tau) > tol.planarity) {
      Mat3 half = Mat3::Identity();
      const Mat3 l = transition_matrix(f);
      for (int i = 0; i < p / 2; ++i) half *= l;
      report.predicts_centrosymmetric =
          (half + Mat3::Identity()).cwiseAbs().maxCoeff() < tol.closure;
    }
  }
  return report;
}

ReconstructionSeed ReconstructionSeed::of2(const Vec2& a, const Vec2& b,
                                           const Vec2& c) {
  return {2, {Vec3(a.x(), a.y(), 0), Vec3(b.x(), b.y(), 0), Vec3(c.x(), c.y(), 0)}};
}

ReconstructionSeed ReconstructionSeed::of3(const Vec3& a, const Vec3& b,
                                           const Vec3& c) {
  return {3, {a, b, c}};
}

ReconstructionSeed ReconstructionSeed::from_polygon(const Polygon& polygon,
                                                    int start) {
  return {polygon.dimension(),
          {polygon.vertex(start), polygon.vertex(start + 1), polygon.vertex(start + 2)}};
}

namespace {

void require_seed(const ReconstructionSeed& seed, const Tolerances& tol) {
  double scale = 0.0;
  for (const auto& p : seed.points) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  const double threshold = tol.degeneracy(scale);
  if (seed.dimension == 2) {
    const Vec2 t0 = (seed.points[1] - seed.points[0]).head<2>();
    const Vec2 t1 = (seed.points[2] - seed.points[1]).head<2>();
    if (std::abs(det2(t0, t1)) < threshold)
      raise(ErrorCode::DegenerateSeed, "seed edges linearly dependent");
  } else {
    if (std::abs(det3(seed.points[0], seed.points[1], seed.points[2])) < threshold)
      raise(ErrorCode::DegenerateSeed, "seed positions linearly dependent");
  }
}

const VertexInvariants& entry_for_vertex(const Signature& sig, int vertex_index) {
  if (sig.cyclic) return sig.entries[wrap_index(vertex_index - sig.offset, sig.size())];
  const int i = vertex_index - sig.offset;
  if (i < 0 || i >= sig.size())
    raise(ErrorCode::InsufficientSignature, "signature does not reach vertex",
          vertex_index);
  return sig.entries[i];
}

}  // namespace

Polygon reconstruct(const ReconstructionSeed& seed, const Signature& signature,
                    int steps, Direction direction, const Tolerances& tol) {
  require_seed(seed, tol);
  if (steps < 0) raise(ErrorCode::InvalidArgument, "steps must be >= 0");

  // Seed occupies global indices 0,1,2; the list grows forward or backward.
  std::vector<Vec3> pts = {seed.points[0], seed.points[1], seed.points[2]};

  if (direction == Direction::forward) {
    for (int s = 0; s < steps; ++s) {
      const int j = 3 + s;  // index of the new vertex
      const VertexInvariants& inv = entry_for_vertex(signature, j - 2);
      const Vec3& rm1 = pts[j - 3];
      const Vec3& r0 = pts[j - 2];
      const Vec3& r1 = pts[j - 1];
      pts.push_back(inv.kappa * rm1 - (inv.kappa + inv.kappa_bar) * r0 +
                    (inv.tau + inv.kappa_bar + 1.0) * r1);
    }
  } else {
    int front = 0;  // global index of pts[0]
    for (int s = 0; s < steps; ++s) {
      // New vertex at front-1 = k-1; the chain inverted at k uses the
      // current first three vertices (r_k, r_{k+1}, r_{k+2}).
      const VertexInvariants& inv = entry_for_vertex(signature, front);
      if (std::abs(inv.kappa) < tol.degeneracy_epsilon)
        raise(ErrorCode::SingularChain, "backward step needs kappa != 0", front);
      const Vec3 prev = (pts[2] + (inv.kappa + inv.kappa_bar) * pts[0] -
                         (inv.tau + inv.kappa_bar + 1.0) * pts[1]) /
                        inv.kappa;
      pts.insert(pts.begin(), prev);
      --front;
    }
  }

  const bool closes = signature.cyclic &&
                      static_cast<int>(pts.size()) == signature.size();
  if (!closes && static_cast<int>(pts.size()) < 4)
    raise(ErrorCode::InvalidArgument,
          "reconstruction too short for an open polygon; increase steps");
  return Polygon(seed.dimension, std::move(pts), closes);
}

}  // namespace centroflow
