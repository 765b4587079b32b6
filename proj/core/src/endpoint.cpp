#include "centroflow/flows/endpoint.hpp"

namespace centroflow {

Polygon endpoint_flow_step(const Polygon& polygon, double c,
                           bool convex_last_vertex, const Tolerances& tol) {
  if (!polygon.closed() || polygon.dimension() != 3)
    raise(ErrorCode::Not3D, "endpoint flow acts on closed space polygons");
  if (polygon.size() < 4)
    raise(ErrorCode::TooFewVertices, "endpoint flow needs p >= 4");
  if (!(c > 0.0 && c < 1.0))
    raise(ErrorCode::InvalidArgument, "c must lie in (0, 1)");

  const int p = polygon.size();
  std::vector<Vec3> pts;
  pts.reserve(p);
  for (int i = 0; i + 1 < p; ++i)
    pts.push_back((1.0 - c) * polygon.vertex(i) + c * polygon.vertex(i + 1));
  if (convex_last_vertex)
    pts.push_back((1.0 - c) * polygon.vertex(p - 1) + c * polygon.vertex(0));
  else
    pts.push_back(c * (polygon.vertex(0) + polygon.vertex(p - 1)));

  Polygon next(3, std::move(pts), true);
  if (!is_admissible(next, tol))
    raise(ErrorCode::DegenerateResult, "endpoint step collapsed to degeneracy");
  return next;
}

}  // namespace centroflow
