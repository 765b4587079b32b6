#pragma once

#include <array>
#include <complex>
#include <optional>

#include "centroflow/chain.hpp"
#include "centroflow/invariants.hpp"
#include "centroflow/polygon.hpp"

namespace centroflow {

enum class ConstantCurveKind {
  planar_regular,           // kappa = 1, winding 1 (affinely regular polygon)
  planar_self_intersecting, // kappa = 1, winding > 1 (star polygon)
  space,                    // kappa = -1, tau = -2 kbar, period even
};

/// Closure data of a constant-invariant curve: rotation angle theta, period p
/// and winding l with p*theta = 2*l*pi, gcd(p, l) = 1.
struct ClosureSpec {
  double kappa = 0.0;
  double kappa_bar = 0.0;
  double tau = 0.0;
  double theta = 0.0;
  int period = 0;
  int winding = 0;
  bool planar = false;
  ConstantCurveKind kind = ConstantCurveKind::planar_regular;
  std::array<std::complex<double>, 3> eigenvalues{};
};

struct ConstantClassification {
  /// Roots of lambda^3 - (tau + kbar + 1) lambda^2 + (kappa + kbar) lambda
  /// - kappa = 0, always reported. Unit modulus characterises closure.
  std::array<std::complex<double>, 3> eigenvalues;
  std::optional<ClosureSpec> closure;
};

/// Decides whether the constant-invariant curve closes with some period
/// <= max_period by brute-force search for ||L^p - E|| < closure tolerance,
/// reporting the minimal such p. Theta is recovered from the complex
/// eigenvalue argument and the winding from round(p*theta / 2*pi).
ConstantClassification classify_constant(const VertexInvariants& inv,
                                         int max_period = 64,
                                         const Tolerances& tol = {});

/// Affinely regular polygon (winding l = 1) or star polygon (l > 1): the
/// closed planar curve with constant kappa = 1, kbar = 2 cos(2*l*pi/p),
/// built by rotating a radius vector by 2*l*pi/p about the origin.
/// Requires p >= 3, gcd(p, l) = 1 and 2l < p.
Polygon generate_regular(int period, int winding = 1);

/// Closed space curve with constant invariants kappa = -1,
/// kbar = 2(1 - cos(2*l*pi/p)), tau = -2*kbar. Requires p even, gcd(p, l) = 1
/// and 0 < 2l < p. The result is centrosymmetric: r_{k+p/2} = -r_k.
Polygon generate_constant_space(int period, int winding = 1);

}  // namespace centroflow
