#pragma once

#include <span>
#include <vector>

#include "centroflow/types.hpp"

namespace centroflow {

/// An ordered vertex sequence in R^2 or R^3. Closed polygons are periodic
/// with period size(); indices passed to vertex()/edge() wrap modulo the
/// period. 2D vertices are stored with z = 0 and accessed via vertex2().
///
/// Edge tangents t_k = r_{k+1} - r_k are always derived from the vertices,
/// never cached.
class Polygon {
 public:
  Polygon(int dimension, std::vector<Vec3> vertices, bool closed);

  static Polygon closed2(const std::vector<Vec2>& vertices);
  static Polygon open2(const std::vector<Vec2>& vertices);
  static Polygon closed3(std::vector<Vec3> vertices);
  static Polygon open3(std::vector<Vec3> vertices);

  int dimension() const noexcept { return dimension_; }
  bool closed() const noexcept { return closed_; }
  int size() const noexcept { return static_cast<int>(vertices_.size()); }

  const std::vector<Vec3>& vertices() const noexcept { return vertices_; }

  /// Vertex r_k; wraps modulo the period when closed, bounds-checked otherwise.
  const Vec3& vertex(int k) const;
  Vec2 vertex2(int k) const;

  /// Edge tangent t_k = r_{k+1} - r_k.
  Vec3 edge(int k) const;
  Vec2 edge2(int k) const;

  /// Largest absolute coordinate; 0 for an empty polygon.
  double coordinate_scale() const;

  /// Max vertex-to-vertex distance (used for geometric residual scales).
  double diameter() const;

  Polygon reversed() const;
  Polygon rotated(int shift) const;  // vertex k of result = vertex k+shift

  /// Linear map (centroaffine when b = 0). The matrix acts on the polygon's
  /// native dimension: top-left 2x2 block for 2D polygons.
  Polygon transformed(const Mat3& a, const Vec3& b = Vec3::Zero()) const;
  Polygon transformed2(const Mat2& a, const Vec2& b = Vec2::Zero()) const;
  Polygon scaled(double s) const;

 private:
  int dimension_;
  bool closed_;
  std::vector<Vec3> vertices_;
};

/// Checks the centroaffine admissibility denominators (2D: [t_{k-1}, t_k];
/// 3D: [r_{k-1}, r_k, r_{k+1}]) against the scale-aware degeneracy threshold.
/// Returns the index of the first inadmissible vertex, or -1 when admissible.
int first_inadmissible_vertex(const Polygon& polygon, const Tolerances& tol = {});

bool is_admissible(const Polygon& polygon, const Tolerances& tol = {});

/// Throws Error{DegenerateDeterminant} naming the offending vertex.
void require_admissible(const Polygon& polygon, const Tolerances& tol = {});

}  // namespace centroflow
