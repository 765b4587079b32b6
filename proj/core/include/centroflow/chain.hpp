#pragma once

#include <array>

#include "centroflow/invariants.hpp"
#include "centroflow/polygon.hpp"
#include "centroflow/types.hpp"

namespace centroflow {

/// Transition matrix L_k of the discrete Frenet-Serret chain,
///
///   (r_{k+2}, r_{k+1}, r_k) = (r_{k+1}, r_k, r_{k-1}) L_k,
///
///   L_k = [ 1 + kbar + tau   1   0 ]
///         [ -kappa - kbar    0   1 ]
///         [ kappa            0   0 ]
///
/// det L_k = kappa_k. With tau = 0 every column sums to 1; in general the
/// first column sums to 1 + tau_k.
Mat3 transition_matrix(const VertexInvariants& inv);

/// Closed-form inverse of L_k; requires kappa != 0 (throws SingularChain).
Mat3 inverse_transition_matrix(const VertexInvariants& inv,
                               const Tolerances& tol = {});

/// Product L_1 L_2 ... L_p over the entries of a cyclic signature.
Mat3 chain_product(const Signature& signature);

struct ClosureReport {
  bool is_closed = false;
  double matrix_product_defect = 0.0;  // max |(L_1...L_p - E)_{ij}|
  double kappa_product = 0.0;          // must be 1 when closed
  /// True when the signature is constant with kappa = -1 and p even, in
  /// which case the reconstructed curve satisfies r_{k+p/2} = -r_k.
  bool predicts_centrosymmetric = false;
};

/// Closure test for a cyclic signature: the curve closes with period p iff
/// the full chain product equals the identity.
ClosureReport closure_check(const Signature& signature, const Tolerances& tol = {});

enum class Direction { forward, backward };

/// Three consecutive vertices anchoring a reconstruction. 2D seeds need
/// linearly independent edges, 3D seeds linearly independent positions.
struct ReconstructionSeed {
  int dimension = 3;
  std::array<Vec3, 3> points;

  static ReconstructionSeed of2(const Vec2& a, const Vec2& b, const Vec2& c);
  static ReconstructionSeed of3(const Vec3& a, const Vec3& b, const Vec3& c);
  /// Vertices start, start+1, start+2 of a polygon.
  static ReconstructionSeed from_polygon(const Polygon& polygon, int start = 0);
};

/// Rebuilds a polygon from three consecutive seed vertices and a signature by
/// iterating the chain
///
///   r_{k+2} = kappa_k r_{k-1} - (kappa_k + kbar_k) r_k
///             + (tau_k + kbar_k + 1) r_{k+1}
///
/// forward, or its inverse backward (which needs kappa_k != 0). The seed
/// occupies global vertex indices 0,1,2; the entry used for a new vertex at
/// index j is the signature entry at vertex j-2 (forward) or j+1 (backward),
/// so reconstructing from a polygon's own first three vertices and its own
/// signature reproduces it.
///
/// `steps` counts appended (or prepended) vertices. When the signature is
/// cyclic with p entries and the result reaches p vertices it is marked
/// closed. Backward results are returned in forward vertex order.
Polygon reconstruct(const ReconstructionSeed& seed, const Signature& signature,
                    int steps, Direction direction = Direction::forward,
                    const Tolerances& tol = {});

}  // namespace centroflow
