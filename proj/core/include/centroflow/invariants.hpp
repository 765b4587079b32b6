#pragma once

#include <vector>

#include "centroflow/polygon.hpp"
#include "centroflow/types.hpp"

namespace centroflow {

/// The per-vertex centroaffine invariant triple. 2D curves carry tau = 0 so
/// planar and space signatures share one representation.
struct VertexInvariants {
  double kappa = 0.0;
  double kappa_bar = 0.0;
  double tau = 0.0;
};

/// Per-vertex invariants of a polygon. For a closed polygon of period p there
/// are exactly p entries and the sequence is cyclic. For an open polygon of n
/// vertices the invariants exist only on the interior window where
/// r_{k-1}..r_{k+2} all exist, giving n - 3 entries; `offset` records the
/// vertex index of the first entry (1 for open curves).
struct Signature {
  std::vector<VertexInvariants> entries;
  bool cyclic = false;
  int offset = 0;

  int size() const noexcept { return static_cast<int>(entries.size()); }

  /// Entry for global vertex index k (cyclic signatures wrap).
  const VertexInvariants& at_vertex(int k) const;

  /// Entry by position, wrapping when cyclic.
  const VertexInvariants& entry(int i) const;

  std::vector<double> kappas() const;
  std::vector<double> kappa_bars() const;
  std::vector<double> taus() const;
};

/// Invariants at every admissible window of the polygon.
///
/// 2D:  kappa_k = [t_k, t_{k+1}] / [t_{k-1}, t_k]
///      kbar_k  = [t_{k-1}, t_{k+1}] / [t_{k-1}, t_k],  tau_k = 0.
/// 3D:  kappa_k = [r_k, r_{k+1}, r_{k+2}] / [r_{k-1}, r_k, r_{k+1}]
///      kbar_k  = [r_{k+1}, t_{k-1}, r_{k+2}] / [r_{k-1}, r_k, r_{k+1}]
///      tau_k   = [t_{k-1}, t_k, t_{k+1}] / [r_{k-1}, r_k, r_{k+1}].
///
/// A vanishing 2D numerator [t_k, t_{k+1}] records kappa_k = 0 (locally
/// straight); a vanishing denominator is an error.
Signature compute_signature(const Polygon& polygon, const Tolerances& tol = {});

/// True iff every |tau_k| is below the planarity tolerance.
bool is_planar(const Signature& signature, const Tolerances& tol = {});

/// Max-norm difference over aligned entries (no shift search; see
/// signature_distance() in match.hpp for the cyclic version).
double signature_max_difference(const Signature& a, const Signature& b);

/// Max-norm difference with signature `a` read starting at entry `shift`.
double signature_max_difference_shifted(const Signature& a, const Signature& b,
                                        int shift);

double max_abs_entry(const Signature& signature);

}  // namespace centroflow
