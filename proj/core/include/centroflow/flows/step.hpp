#pragma once

#include "centroflow/invariants.hpp"
#include "centroflow/polygon.hpp"

namespace centroflow {

/// One flow generation: the stepped polygon together with the signature the
/// flow's invariant recursion predicts for it. Every flow pairs a direct
/// geometric step with an independent closed-form prediction; the two must
/// agree within the cross-check tolerance.
struct FlowStep {
  Polygon polygon;
  Signature predicted;
};

}  // namespace centroflow
