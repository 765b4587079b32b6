#include "centroflow/match.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace centroflow {

Polygon AffineMap::apply(const Polygon& polygon) const {
  return polygon.transformed(linear, translation);
}

std::pair<double, int> signature_distance(const Signature& a, const Signature& b,
                                          bool cyclic) {
  if (a.size() != b.size())
    raise(ErrorCode::SizeMismatch, "signature entry counts differ");
  if (!cyclic) return {signature_max_difference(a, b), 0};

  double best = std::numeric_limits<double>::infinity();
  int best_shift = 0;
  for (int s = 0; s < a.size(); ++s) {
    const double d = signature_max_difference_shifted(a, b, s);
    if (d < best) {
      best = d;
      best_shift = s;
    }
  }
  return {best, best_shift};
}

namespace {

// Exact witness solve from a consecutive window of correspondences
// q_i = A p_{i+shift} (+ b). Picks the best-conditioned window start.
std::optional<AffineMap> solve_window(const Polygon& p, const Polygon& q,
                                      int shift, MatchMode mode,
                                      double conditioning_limit) {
  const int n = p.size();
  // Open polygons do not wrap: the three-vertex window must fit.
  const int start_limit = p.closed() ? n : n - 2;
  int best_start = -1;
  double best_cond = conditioning_limit;

  const auto window_matrix = [&](int start) -> Mat3 {
    Mat3 m = Mat3::Identity();
    if (mode == MatchMode::centroaffine3) {
      for (int j = 0; j < 3; ++j) m.col(j) = p.vertex(start + shift + j);
    } else {
      // Edge pair for the linear part; translation follows.
      m.setIdentity();
      m.topLeftCorner<2, 2>().col(0) =
          p.vertex2(start + shift + 1) - p.vertex2(start + shift);
      m.topLeftCorner<2, 2>().col(1) =
          p.vertex2(start + shift + 2) - p.vertex2(start + shift + 1);
    }
    return m;
  };

  for (int start = 0; start < start_limit; ++start) {
    const Mat3 m = window_matrix(start);
    Eigen::JacobiSVD<Mat3> svd(m);
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    if (smin <= 0.0) continue;
    const double cond = smax / smin;
    if (cond < best_cond) {
      best_cond = cond;
      best_start = start;
    }
  }
  if (best_start < 0) return std::nullopt;

  AffineMap map;
  map.mode = mode;
  if (mode == MatchMode::centroaffine3) {
    Mat3 pm = window_matrix(best_start);
    Mat3 qm;
    for (int j = 0; j < 3; ++j) qm.col(j) = q.vertex(best_start + j);
    map.linear = qm * pm.inverse();
    map.translation = Vec3::Zero();
  } else {
    Mat2 pe;
    pe.col(0) = p.vertex2(best_start + shift + 1) - p.vertex2(best_start + shift);
    pe.col(1) = p.vertex2(best_start + shift + 2) - p.vertex2(best_start + shift + 1);
    Mat2 qe;
    qe.col(0) = q.vertex2(best_start + 1) - q.vertex2(best_start);
    qe.col(1) = q.vertex2(best_start + 2) - q.vertex2(best_start + 1);
    const Mat2 a = qe * pe.inverse();
    map.linear = Mat3::Identity();
    map.linear.topLeftCorner<2, 2>() = a;
    const Vec2 b = q.vertex2(best_start) - a * p.vertex2(best_start + shift);
    map.translation = Vec3(b.x(), b.y(), 0.0);
  }
  return map;
}

// Least-squares refinement over all correspondences; rows of A (and b) are
// independent linear problems.
void refine_least_squares(AffineMap& map, const Polygon& p, const Polygon& q,
                          int shift) {
  const int n = p.size();
  const int d = p.dimension();
  const bool with_translation = map.mode == MatchMode::affine2;
  const int cols = d + (with_translation ? 1 : 0);

  Eigen::MatrixXd lhs(n, cols);
  Eigen::MatrixXd rhs(n, d);
  for (int i = 0; i < n; ++i) {
    lhs.row(i).head(d) = p.vertex(i + shift).head(d).transpose();
    if (with_translation) lhs(i, d) = 1.0;
    rhs.row(i) = q.vertex(i).head(d).transpose();
  }
  Eigen::MatrixXd sol = lhs.colPivHouseholderQr().solve(rhs);  // cols x d

  map.linear = Mat3::Identity();
  map.linear.topLeftCorner(d, d) = sol.topRows(d).transpose();
  map.translation = Vec3::Zero();
  if (with_translation) map.translation.head(d) = sol.row(d).transpose();
}

double geometric_residual(const AffineMap& map, const Polygon& p,
                          const Polygon& q, int shift) {
  double r = 0.0;
  for (int i = 0; i < p.size(); ++i)
    r = std::max(r, (map.apply(p.vertex(i + shift)) - q.vertex(i)).norm());
  return r;
}

struct Candidate {
  double signature_residual = std::numeric_limits<double>::infinity();
  int shift = 0;
  bool reversed = false;
};

}  // namespace

MatchReport match_polygons(const Polygon& p, const Polygon& q, MatchMode mode,
                           const MatchOptions& options, const Tolerances& tol) {
  if (p.dimension() != q.dimension() || p.size() != q.size() ||
      p.closed() != q.closed())
    raise(ErrorCode::SizeMismatch,
          "polygons must agree in dimension, vertex count and closedness");
  if (mode == MatchMode::affine2 && p.dimension() != 2)
    raise(ErrorCode::Not2D, "affine2 matching needs 2D polygons");
  if (mode == MatchMode::centroaffine3 && p.dimension() != 3)
    raise(ErrorCode::Not3D, "centroaffine3 matching needs 3D polygons");
  if (!is_admissible(p, tol) || !is_admissible(q, tol))
    raise(ErrorCode::InadmissibleInput, "matching needs admissible polygons");

  const Signature sig_p = compute_signature(p, tol);
  const bool cyclic = p.closed();

  Candidate best;
  const auto consider = [&](const Polygon& q_variant, bool reversed) {
    const Signature sig_q = compute_signature(q_variant, tol);
    const auto [dist, shift] = signature_distance(sig_p, sig_q, cyclic);
    if (dist < best.signature_residual) {
      best = {dist, shift, reversed};
    }
  };
  consider(q, false);
  if (options.search_reversal) consider(q.reversed(), true);

  MatchReport report;
  report.shift = best.shift;
  report.reversed = best.reversed;
  report.signature_residual = best.signature_residual;
  report.geometric_residual = std::numeric_limits<double>::infinity();
  report.matched = false;

  if (best.signature_residual > options.signature_tolerance) return report;

  const Polygon q_used = best.reversed ? q.reversed() : q;
  std::optional<AffineMap> map =
      solve_window(p, q_used, best.shift, mode, options.conditioning_limit);
  if (!map) return report;

  refine_least_squares(*map, p, q_used, best.shift);

  const double geo = geometric_residual(*map, p, q_used, best.shift);
  const double geo_tol =
      options.geometric_tolerance * std::max(1.0, q_used.diameter());
  report.transform = *map;
  report.geometric_residual = geo;
  report.matched = geo <= geo_tol;
  return report;
}

}  // namespace centroflow
