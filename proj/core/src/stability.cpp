#include "centroflow/flows/stability.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/QR>

#include "centroflow/flows/endpoint.hpp"

namespace centroflow {

const char* flow_kind_name(FlowKind kind) {
  switch (kind) {
    case FlowKind::transversal: return "transversal";
    case FlowKind::tangent: return "tangent";
    case FlowKind::proportional: return "proportional";
    case FlowKind::pentagram: return "pentagram";
    case FlowKind::inverse_pentagram: return "inverse-pentagram";
    case FlowKind::endpoint: return "endpoint";
  }
  return "unknown";
}

namespace {

Renormalization default_renormalization(FlowKind kind) {
  // The endpoint iteration squeezes its subdominant coordinate directions
  // orders of magnitude below the dominant one long before the signature
  // settles; a scalar rescale cannot stop the resulting cancellation.
  return kind == FlowKind::endpoint ? Renormalization::frame
                                    : Renormalization::scalar;
}

struct Normalized {
  Polygon polygon;
  double rescale = 1.0;
};

Normalized renormalize(const Polygon& polygon, Renormalization mode) {
  switch (mode) {
    case Renormalization::none:
      return {polygon, 1.0};
    case Renormalization::scalar: {
      const double scale = polygon.coordinate_scale();
      if (scale <= 0.0) return {polygon, 1.0};
      return {polygon.scaled(1.0 / scale), 1.0 / scale};
    }
    case Renormalization::frame: {
      // Right-multiplying the vertex matrix by a nonsingular d x d factor is
      // a centroaffine transform; the inverse QR factor keeps every
      // coordinate direction O(1).
      const int n = polygon.size();
      const int d = polygon.dimension();
      Eigen::MatrixXd x(n, d);
      for (int i = 0; i < n; ++i)
        x.row(i) = polygon.vertex(i).head(d).transpose();
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
      Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, d);
      std::vector<Vec3> pts(n, Vec3::Zero());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) pts[i][j] = q(i, j);
      return {Polygon(d, std::move(pts), polygon.closed()), 1.0};
    }
  }
  return {polygon, 1.0};
}

}  // namespace

SingleStep run_flow_step(const FlowParameters& params, const Polygon& polygon,
                         const Tolerances& tol) {
  SingleStep out{polygon, Signature{}, {}, {}, 0.0};
  const int p = polygon.size();

  const Signature current = compute_signature(polygon, tol);
  std::optional<Signature> predicted;

  switch (params.kind) {
    case FlowKind::transversal: {
      std::vector<double> betas =
          planarity_betas(current, polygon, params.recipe, tol);
      FlowStep step = transversal_step(polygon, betas, tol);
      out.polygon = std::move(step.polygon);
      predicted = std::move(step.predicted);
      out.betas = std::move(betas);
      break;
    }
    case FlowKind::tangent: {
      FlowCoefficients coeffs = params.tangent_coefficients;
      if (coeffs.alphas.size() == 1) coeffs.alphas.assign(p, coeffs.alphas[0]);
      if (coeffs.betas.size() == 1) coeffs.betas.assign(p, coeffs.betas[0]);
      FlowStep step = tangent_step(polygon, coeffs, tol);
      out.polygon = std::move(step.polygon);
      predicted = std::move(step.predicted);
      out.alphas = coeffs.alphas;
      out.betas = coeffs.betas;
      break;
    }
    case FlowKind::proportional: {
      FlowStep step = proportional_step(polygon, params.alpha, tol);
      out.polygon = std::move(step.polygon);
      predicted = std::move(step.predicted);
      out.alphas.assign(p, params.alpha);
      break;
    }
    case FlowKind::pentagram: {
      FlowStep step = pentagram_step(polygon, tol);
      out.polygon = std::move(step.polygon);
      predicted = std::move(step.predicted);
      break;
    }
    case FlowKind::inverse_pentagram: {
      InversePentagramStep step = inverse_pentagram_step(polygon, tol);
      out.polygon = std::move(step.polygon);
      predicted = std::move(step.predicted);
      break;
    }
    case FlowKind::endpoint: {
      out.polygon = endpoint_flow_step(polygon, params.c,
                                       params.endpoint_convex_variant, tol);
      break;
    }
  }

  out.signature = compute_signature(out.polygon, tol);
  if (predicted) {
    out.prediction_error = signature_max_difference(*predicted, out.signature);
    const double scale = std::max(1.0, max_abs_entry(out.signature));
    if (out.prediction_error > tol.cross_check * scale)
      raise(ErrorCode::DegenerateResult,
            "invariant recursion disagrees with direct recomputation; "
            "input too close to a flow singularity");
  }
  return out;
}

ProbeResult stability_probe(const FlowParameters& params, const Polygon& polygon,
                            int max_generations, int max_period,
                            const Tolerances& tol) {
  ProbeResult result;
  result.trace.kind = params.kind;
  result.report.stable = false;
  result.report.residual = std::numeric_limits<double>::infinity();

  const Renormalization mode =
      params.renormalization.value_or(default_renormalization(params.kind));

  Polygon current = renormalize(polygon, mode).polygon;
  std::vector<Signature> history;
  history.push_back(compute_signature(current, tol));
  result.trace.generations.push_back(
      {current, history.back(), {}, {}, 1.0});

  for (int gen = 0; gen < max_generations; ++gen) {
    std::optional<SingleStep> step;
    try {
      step.emplace(run_flow_step(params, current, tol));
    } catch (const Error& e) {
      // A failure on the very first step means the input is outside the
      // flow's domain; later failures are a property of the run.
      if (gen == 0) throw;
      result.trace.stop_reason = std::string("flow-error: ") + e.what();
      return result;
    }
    result.trace.generations.back().alphas = step->alphas;
    result.trace.generations.back().betas = step->betas;

    Normalized normalized = renormalize(step->polygon, mode);
    current = std::move(normalized.polygon);
    Signature sig = compute_signature(current, tol);

    const double residual = signature_max_difference(sig, history.back());
    result.report.residual = residual;
    result.trace.generations.push_back({current, sig, {}, {}, normalized.rescale});

    const double scale = std::max(1.0, max_abs_entry(sig));
    if (residual < tol.stability * scale) {
      result.report.stable = true;
      result.report.first_stable_generation = gen;
      result.trace.stop_reason = "stable";
      return result;
    }

    // Periodic stability: some earlier descendant matches up to a cyclic
    // index shift. Exhaustive over shifts; smallest residual wins, smallest
    // shift breaks ties.
    const int m = static_cast<int>(history.size());
    for (int q = 2; q <= std::min(max_period, m); ++q) {
      const Signature& old = history[m - q];
      double best = std::numeric_limits<double>::infinity();
      int best_shift = 0;
      for (int s = 0; s < sig.size(); ++s) {
        const double d = signature_max_difference_shifted(old, sig, s);
        if (d < best - 1e-15) {
          best = d;
          best_shift = s;
        }
      }
      if (best < tol.stability * scale) {
        result.report.periodic = Periodicity{q, best_shift};
        result.trace.stop_reason = "periodically-stable";
        return result;
      }
    }

    history.push_back(std::move(sig));
  }

  result.trace.stop_reason = "no-convergence";
  return result;
}

}  // namespace centroflow
