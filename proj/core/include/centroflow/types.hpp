#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace centroflow {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

enum class ErrorCode {
  TooFewVertices,
  DegenerateDeterminant,
  DegenerateSeed,
  DegenerateResult,
  SingularChain,
  SingularTransfer,
  InsufficientSignature,
  InvalidPeriod,
  NotClosed,
  Not2D,
  Not3D,
  NotConvex,
  NotPlanar,
  ZeroBeta,
  ZeroDenominator,
  ZeroKappaBar,
  DenominatorVanishes,
  RankMismatch,
  SizeMismatch,
  InadmissibleInput,
  InvalidDocument,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// Library error. `index` carries the offending vertex index where one exists,
/// -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, int index = -1)
      : std::runtime_error(std::move(message)), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  int index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  int index_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message, int index = -1);

/// Numeric thresholds used across the library. The degeneracy threshold for
/// denominator determinants is scale-aware: eps * max(1, coordinate scale)^3,
/// since the determinants grow with the cube of the coordinate magnitude.
struct Tolerances {
  double degeneracy_epsilon = 1e-12;
  double signature = 1e-6;   // signature comparison, absolute
  double planarity = 1e-8;   // max |tau| for a signature to count as planar
  double closure = 1e-8;     // ||L_1...L_p - E|| defect
  double stability = 1e-8;   // successive-signature max-norm difference
  double cross_check = 1e-8; // predicted vs directly recomputed invariants

  double degeneracy(double coordinate_scale) const {
    const double s = coordinate_scale > 1.0 ? coordinate_scale : 1.0;
    return degeneracy_epsilon * s * s * s;
  }
};

inline double det2(const Vec2& a, const Vec2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

inline double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a.dot(b.cross(c));
}

/// Wrap an index into [0, n). Works for any offset a handful of periods out.
inline int wrap_index(int k, int n) {
  int m = k % n;
  return m < 0 ? m + n : m;
}

}  // namespace centroflow
