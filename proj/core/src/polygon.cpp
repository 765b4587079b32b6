#include "centroflow/polygon.hpp"

#include <algorithm>
#include <cmath>

namespace centroflow {

namespace {

std::vector<Vec3> lift(const std::vector<Vec2>& pts) {
  std::vector<Vec3> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.emplace_back(p.x(), p.y(), 0.0);
  return out;
}

}  // namespace

Polygon::Polygon(int dimension, std::vector<Vec3> vertices, bool closed)
    : dimension_(dimension), closed_(closed), vertices_(std::move(vertices)) {
  if (dimension_ != 2 && dimension_ != 3)
    raise(ErrorCode::InvalidArgument, "polygon dimension must be 2 or 3");
  const int min_count = closed_ ? 3 : 4;
  if (size() < min_count)
    raise(ErrorCode::TooFewVertices,
          (closed_ ? "closed polygon needs >= 3 vertices"
                   : "open polygon needs >= 4 vertices"));
  for (int k = 0; k < size(); ++k) {
    if (!vertices_[k].allFinite())
      raise(ErrorCode::InvalidArgument, "non-finite vertex coordinate", k);
    if (dimension_ == 2 && vertices_[k].z() != 0.0)
      raise(ErrorCode::InvalidArgument, "2D vertex with nonzero z", k);
  }
}

Polygon Polygon::closed2(const std::vector<Vec2>& vertices) {
  return Polygon(2, lift(vertices), true);
}
Polygon Polygon::open2(const std::vector<Vec2>& vertices) {
  return Polygon(2, lift(vertices), false);
}
Polygon Polygon::closed3(std::vector<Vec3> vertices) {
  return Polygon(3, std::move(vertices), true);
}
Polygon Polygon::open3(std::vector<Vec3> vertices) {
  return Polygon(3, std::move(vertices), false);
}

const Vec3& Polygon::vertex(int k) const {
  if (closed_) return vertices_[wrap_index(k, size())];
  if (k < 0 || k >= size())
    raise(ErrorCode::InvalidArgument,
          "vertex index out of range for open polygon", k);
  return vertices_[k];
}

Vec2 Polygon::vertex2(int k) const { return vertex(k).head<2>(); }

Vec3 Polygon::edge(int k) const { return vertex(k + 1) - vertex(k); }

Vec2 Polygon::edge2(int k) const { return edge(k).head<2>(); }

double Polygon::coordinate_scale() const {
  double s = 0.0;
  for (const auto& v : vertices_) s = std::max(s, v.cwiseAbs().maxCoeff());
  return s;
}

double Polygon::diameter() const {
  double d = 0.0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      d = std::max(d, (vertices_[i] - vertices_[j]).norm());
  return d;
}

Polygon Polygon::reversed() const {
  std::vector<Vec3> out(vertices_.rbegin(), vertices_.rend());
  return Polygon(dimension_, std::move(out), closed_);
}

Polygon Polygon::rotated(int shift) const {
  if (!closed_)
    raise(ErrorCode::NotClosed, "cyclic rotation needs a closed polygon");
  std::vector<Vec3> out;
  out.reserve(vertices_.size());
  for (int k = 0; k < size(); ++k) out.push_back(vertex(k + shift));
  return Polygon(dimension_, std::move(out), closed_);
}

Polygon Polygon::transformed(const Mat3& a, const Vec3& b) const {
  std::vector<Vec3> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(a * v + b);
  if (dimension_ == 2)
    for (auto& v : out) v.z() = 0.0;
  return Polygon(dimension_, std::move(out), closed_);
}

Polygon Polygon::transformed2(const Mat2& a, const Vec2& b) const {
  if (dimension_ != 2) raise(ErrorCode::Not2D, "2D transform on a 3D polygon");
  Mat3 m = Mat3::Identity();
  m.topLeftCorner<2, 2>() = a;
  Vec3 t(b.x(), b.y(), 0.0);
  return transformed(m, t);
}

Polygon Polygon::scaled(double s) const {
  std::vector<Vec3> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(s * v);
  return Polygon(dimension_, std::move(out), closed_);
}

int first_inadmissible_vertex(const Polygon& polygon, const Tolerances& tol) {
  const double threshold = tol.degeneracy(polygon.coordinate_scale());
  const int n = polygon.size();
  // Interior windows only for open polygons.
  const int lo = polygon.closed() ? 0 : 1;
  const int hi = polygon.closed() ? n - 1 : n - 2;
  for (int k = lo; k <= hi; ++k) {
    double denom;
    if (polygon.dimension() == 2)
      denom = det2(polygon.edge2(k - 1), polygon.edge2(k));
    else
      denom = det3(polygon.vertex(k - 1), polygon.vertex(k), polygon.vertex(k + 1));
    if (std::abs(denom) < threshold) return k;
  }
  return -1;
}

bool is_admissible(const Polygon& polygon, const Tolerances& tol) {
  return first_inadmissible_vertex(polygon, tol) < 0;
}

void require_admissible(const Polygon& polygon, const Tolerances& tol) {
  const int k = first_inadmissible_vertex(polygon, tol);
  if (k >= 0)
    raise(ErrorCode::DegenerateDeterminant,
          "denominator determinant below degeneracy tolerance", k);
}

}  // namespace centroflow
