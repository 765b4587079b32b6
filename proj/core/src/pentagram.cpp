#include "centroflow/flows/pentagram.hpp"

#include <cmath>

#include "centroflow/convexity.hpp"

namespace centroflow {

PentagramRatios pentagram_ratios(const VertexInvariants& inv, const Tolerances& tol) {
  const double denom = 1.0 + inv.kappa + inv.kappa_bar;
  if (std::abs(denom) < tol.degeneracy_epsilon)
    raise(ErrorCode::DenominatorVanishes, "1 + kappa + kbar vanished");
  PentagramRatios r;
  r.lambda = 1.0 / denom;
  r.lambda_bar = (1.0 + inv.kappa_bar) / denom;
  return r;
}

PentagramRatios inverse_pentagram_ratios(const VertexInvariants& inv,
                                         const Tolerances& tol) {
  if (std::abs(inv.kappa_bar) < tol.degeneracy_epsilon)
    raise(ErrorCode::ZeroKappaBar, "inverse pentagram needs kbar != 0");
  PentagramRatios r;
  r.lambda = inv.kappa / inv.kappa_bar;
  r.mu = -1.0 / inv.kappa_bar;
  return r;
}

namespace {

void require_convex_closed(const Polygon& polygon, const Tolerances& tol,
                           int min_vertices) {
  if (!polygon.closed())
    raise(ErrorCode::NotClosed, "pentagram maps act on closed polygons");
  if (polygon.dimension() != 2)
    raise(ErrorCode::Not2D, "pentagram maps act on planar polygons");
  if (polygon.size() < min_vertices)
    raise(ErrorCode::TooFewVertices, "pentagram maps need p >= 5");
  const ConvexityReport conv = convexity_check(polygon, tol);
  if (!conv.is_convex)
    raise(ErrorCode::NotConvex, "pentagram maps need a convex polygon");
}

}  // namespace

Signature pentagram_prediction(const Signature& signature, const Tolerances& tol) {
  if (!signature.cyclic)
    raise(ErrorCode::InvalidArgument, "pentagram prediction needs a cyclic signature");
  const int p = signature.size();
  const auto inv = [&](int n) -> const VertexInvariants& {
    return signature.entries[wrap_index(n, p)];
  };
  const auto d = [&](int n) {
    const double v = 1.0 + inv(n).kappa + inv(n).kappa_bar;
    if (std::abs(v) < tol.degeneracy_epsilon)
      raise(ErrorCode::DenominatorVanishes, "1 + kappa + kbar vanished",
            wrap_index(n, p));
    return v;
  };

  Signature out = signature;
  for (int k = 0; k < p; ++k) {
    // Output vertex k sits on the diagonals through k-1; its invariants come
    // from the recursion evaluated one index back.
    const int n = k - 1;
    const double kbar_next = d(n + 1) * (1.0 + inv(n + 2).kappa_bar) / d(n + 2) - 1.0;
    const double denom = (1.0 + inv(n).kappa_bar) - d(n) / d(n - 1);
    if (std::abs(denom) < tol.degeneracy_epsilon)
      raise(ErrorCode::DenominatorVanishes, "pentagram kappa recursion denominator",
            wrap_index(n, p));
    VertexInvariants& nxt = out.entries[k];
    nxt.kappa_bar = kbar_next;
    nxt.kappa = inv(n).kappa * kbar_next / denom;
    nxt.tau = 0.0;
  }
  return out;
}

FlowStep pentagram_step(const Polygon& polygon, const Tolerances& tol) {
  require_convex_closed(polygon, tol, 5);
  const Signature before = compute_signature(polygon, tol);
  const Signature predicted = pentagram_prediction(before, tol);

  const int p = polygon.size();
  std::vector<Vec2> pts;
  pts.reserve(p);
  for (int k = 0; k < p; ++k) {
    // Intersection of the shortest diagonals (r_{k-2}, r_k) and
    // (r_{k-1}, r_{k+1}), written as the division point of the latter.
    const VertexInvariants& inv = before.entries[wrap_index(k - 1, p)];
    const double lambda = pentagram_ratios(inv, tol).lambda;
    const Vec2 base = polygon.vertex2(k - 1);
    pts.push_back(base + lambda * (polygon.vertex2(k + 1) - base));
  }
  Polygon next = Polygon::closed2(pts);
  if (!is_admissible(next, tol))
    raise(ErrorCode::DegenerateResult, "pentagram image lost admissibility");
  return {std::move(next), predicted};
}

Signature inverse_pentagram_prediction(const Signature& signature,
                                       const Tolerances& tol) {
  if (!signature.cyclic)
    raise(ErrorCode::InvalidArgument,
          "inverse pentagram prediction needs a cyclic signature");
  const int p = signature.size();
  const auto inv = [&](int n) -> const VertexInvariants& {
    return signature.entries[wrap_index(n, p)];
  };

  Signature out = signature;
  for (int n = 0; n < p; ++n) {
    for (int j : {n - 1, n, n + 1, n + 2})
      if (std::abs(inv(j).kappa_bar) < tol.degeneracy_epsilon)
        raise(ErrorCode::ZeroKappaBar, "inverse pentagram needs kbar != 0",
              wrap_index(j, p));
    const double bracket =
        inv(n).kappa_bar + inv(n).kappa_bar * inv(n + 2).kappa / inv(n + 2).kappa_bar +
        1.0;
    const double denom = inv(n + 1).kappa * inv(n - 1).kappa_bar +
                         inv(n + 1).kappa_bar * (inv(n - 1).kappa_bar + 1.0);
    if (std::abs(denom) < tol.degeneracy_epsilon)
      raise(ErrorCode::DenominatorVanishes,
            "inverse pentagram recursion denominator", n);
    VertexInvariants& nxt = out.entries[n];
    nxt.kappa = inv(n + 1).kappa * inv(n - 1).kappa_bar * bracket / denom;
    nxt.kappa_bar =
        inv(n + 1).kappa_bar * (inv(n - 1).kappa_bar + 1.0) * bracket / denom - 1.0;
    nxt.tau = 0.0;
  }
  return out;
}

InversePentagramStep inverse_pentagram_step(const Polygon& polygon,
                                            const Tolerances& tol) {
  require_convex_closed(polygon, tol, 5);
  const Signature before = compute_signature(polygon, tol);

  InversePentagramStep result{polygon, inverse_pentagram_prediction(before, tol),
                              false};
  for (const auto& v : before.entries)
    if (v.kappa_bar <= 0.0) result.convexity_warning = true;

  const int p = polygon.size();
  std::vector<Vec2> pts;
  pts.reserve(p);
  for (int k = 0; k < p; ++k) {
    const double lambda = inverse_pentagram_ratios(before.entries[k], tol).lambda;
    pts.push_back(polygon.vertex2(k) +
                  lambda * (polygon.vertex2(k) - polygon.vertex2(k - 1)));
  }
  result.polygon = Polygon::closed2(pts);
  if (!is_admissible(result.polygon, tol))
    raise(ErrorCode::DegenerateResult, "inverse pentagram image lost admissibility");
  return result;
}

}  // namespace centroflow
