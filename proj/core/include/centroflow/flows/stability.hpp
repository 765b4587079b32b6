#pragma once

#include <optional>
#include <string>
#include <vector>

#include "centroflow/flows/pentagram.hpp"
#include "centroflow/flows/tangent.hpp"
#include "centroflow/flows/transversal.hpp"
#include "centroflow/invariants.hpp"
#include "centroflow/polygon.hpp"

namespace centroflow {

enum class FlowKind {
  transversal,
  tangent,
  proportional,
  pentagram,
  inverse_pentagram,
  endpoint,
};

const char* flow_kind_name(FlowKind kind);

/// Per-generation renormalization. Both choices are centroaffine maps, so
/// signatures are untouched:
///  - scalar: divide all coordinates by the largest magnitude;
///  - frame: right-multiply the vertex matrix by the inverse QR factor,
///    keeping all coordinate directions O(1). Contracting flows whose
///    subdominant components decay quickly (the endpoint flow) need the
///    frame variant to stay out of catastrophic cancellation.
enum class Renormalization { none, scalar, frame };

struct FlowParameters {
  FlowKind kind = FlowKind::proportional;
  double alpha = 0.5;                // proportional
  double c = 0.1;                    // endpoint
  bool endpoint_convex_variant = false;
  TransversalRecipe recipe = TransversalRecipe::mean_curvatures();
  FlowCoefficients tangent_coefficients;  // tangent; broadcast if size 1
  std::optional<Renormalization> renormalization;  // default depends on kind
};

struct TraceRecord {
  Polygon polygon;
  Signature signature;
  std::vector<double> alphas;  // coefficients used to produce the NEXT generation
  std::vector<double> betas;
  double rescale = 1.0;   // scalar renormalization factor applied after stepping
};

struct FlowTrace {
  FlowKind kind = FlowKind::proportional;
  std::vector<TraceRecord> generations;
  std::string stop_reason;
};

struct Periodicity {
  int period = 0;
  int cyclic_shift = 0;
};

struct StabilityReport {
  bool stable = false;
  std::optional<Periodicity> periodic;
  std::optional<int> first_stable_generation;
  double residual = 0.0;  // last successive-signature difference
};

struct ProbeResult {
  StabilityReport report;
  FlowTrace trace;
};

/// Advances the polygon one generation under the configured flow, verifying
/// the flow's invariant-recursion prediction against direct recomputation
/// (except the endpoint flow, which has no closed-form recursion). Returns
/// the stepped polygon and records the coefficients used.
struct SingleStep {
  Polygon polygon;
  Signature signature;     // recomputed directly
  std::vector<double> alphas;
  std::vector<double> betas;
  double prediction_error = 0.0;
};
SingleStep run_flow_step(const FlowParameters& params, const Polygon& polygon,
                         const Tolerances& tol = {});

/// Iterates the flow, renormalizing each generation, until the signature is
/// unchanged in the next descendant (stable), or some descendant m+q matches
/// generation m up to a cyclic index shift (periodically stable, q <=
/// max_period, exhaustive shift search with smallest-residual tie-break), or
/// max_generations pass (stop_reason "no-convergence"; not an error).
ProbeResult stability_probe(const FlowParameters& params, const Polygon& polygon,
                            int max_generations, int max_period,
                            const Tolerances& tol = {});

}  // namespace centroflow
