#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "centroflow/centroflow.hpp"
#include "tables.hpp"

namespace {

using namespace centroflow;
using nlohmann::json;

constexpr int kExitMatch = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

Tolerances tolerances_from_env() {
  Tolerances tol;
  if (const char* env = std::getenv("CENTROFLOW_TOLERANCE")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) tol.signature = v;
  }
  return tol;
}

json affine_map_json(const AffineMap& map) {
  const int d = map.mode == MatchMode::affine2 ? 2 : 3;
  json linear = json::array();
  for (int i = 0; i < d; ++i) {
    json row = json::array();
    for (int j = 0; j < d; ++j) row.push_back(map.linear(i, j));
    linear.push_back(std::move(row));
  }
  json out;
  out["mode"] = map.mode == MatchMode::affine2 ? "affine2" : "centroaffine3";
  out["linear"] = std::move(linear);
  if (map.mode == MatchMode::affine2)
    out["translation"] = {map.translation.x(), map.translation.y()};
  return out;
}

struct FlowCliOptions {
  std::string kind;
  std::vector<std::string> params;
  std::string input;
  std::string out_dir;
  int generations = 100;
  int max_period = 16;
  std::uint64_t seed = 1;
  int dim = 2;
  int vertices = 7;
  bool svg = false;
};

double parse_param(const std::vector<std::string>& params, const std::string& key,
                   std::optional<double> fallback = std::nullopt) {
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) continue;
    if (kv.substr(0, eq) == key) return std::stod(kv.substr(eq + 1));
  }
  if (fallback) return *fallback;
  raise(ErrorCode::InvalidArgument, "missing required --param " + key + "=...");
}

std::string parse_param_string(const std::vector<std::string>& params,
                               const std::string& key, std::string fallback) {
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) continue;
    if (kv.substr(0, eq) == key) return kv.substr(eq + 1);
  }
  return fallback;
}

FlowParameters build_flow_parameters(const FlowCliOptions& options) {
  FlowParameters params;
  if (options.kind == "transversal") {
    params.kind = FlowKind::transversal;
    const std::string recipe = parse_param_string(options.params, "recipe", "mean");
    if (recipe == "mean") {
      params.recipe = TransversalRecipe::mean_curvatures();
    } else if (recipe.rfind("constant:", 0) == 0) {
      params.recipe = TransversalRecipe::constant(std::stod(recipe.substr(9)));
    } else {
      raise(ErrorCode::InvalidArgument,
            "recipe must be 'mean' or 'constant:<value>'");
    }
  } else if (options.kind == "tangent") {
    params.kind = FlowKind::tangent;
    params.tangent_coefficients.alphas = {parse_param(options.params, "alpha", 0.0)};
    params.tangent_coefficients.betas = {parse_param(options.params, "beta", 0.0)};
  } else if (options.kind == "proportional") {
    params.kind = FlowKind::proportional;
    params.alpha = parse_param(options.params, "alpha");
    if (!(params.alpha > 0.0 && params.alpha < 1.0))
      raise(ErrorCode::InvalidArgument, "alpha must lie in (0, 1)");
  } else if (options.kind == "pentagram") {
    params.kind = FlowKind::pentagram;
  } else if (options.kind == "inverse-pentagram") {
    params.kind = FlowKind::inverse_pentagram;
  } else if (options.kind == "endpoint") {
    params.kind = FlowKind::endpoint;
    params.c = parse_param(options.params, "c");
    if (!(params.c > 0.0 && params.c < 1.0))
      raise(ErrorCode::InvalidArgument, "c must lie in (0, 1)");
    params.endpoint_convex_variant =
        parse_param_string(options.params, "last-vertex", "verbatim") == "convex";
  } else {
    raise(ErrorCode::InvalidArgument, "unknown flow kind " + options.kind);
  }
  return params;
}

Polygon flow_input_polygon(const FlowCliOptions& options,
                           const FlowParameters& params) {
  if (!options.input.empty()) return load_polygon(options.input).polygon;
  Rng rng(options.seed);
  switch (params.kind) {
    case FlowKind::pentagram:
    case FlowKind::inverse_pentagram:
      return random_convex_polygon(rng, options.vertices);
    case FlowKind::transversal:
      return random_planar_closed_polygon3(rng, options.vertices);
    case FlowKind::tangent:
    case FlowKind::endpoint:
      return random_admissible_polygon(rng, 3, options.vertices);
    case FlowKind::proportional:
      return random_admissible_polygon(rng, options.dim, options.vertices);
  }
  raise(ErrorCode::InvalidArgument, "unreachable");
}

int cmd_invariants(const std::string& path, const std::string& csv_path,
                   const Tolerances& tol) {
  const PolygonDocument doc = load_polygon(path);
  const Signature sig = compute_signature(doc.polygon, tol);
  std::cout << format_signature_table(sig);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) raise(ErrorCode::InvalidDocument, "cannot write " + csv_path);
    write_signature_csv(out, sig);
  }
  return kExitMatch;
}

int cmd_flow(const FlowCliOptions& options, const Tolerances& tol) {
  const FlowParameters params = build_flow_parameters(options);
  const Polygon start = flow_input_polygon(options, params);

  const ProbeResult result =
      stability_probe(params, start, options.generations, options.max_period, tol);

  namespace fs = std::filesystem;
  if (!options.out_dir.empty()) {
    fs::create_directories(options.out_dir);
    std::ofstream csv(fs::path(options.out_dir) / "signatures.csv");
    csv << "generation,vertex,kappa,kappa_bar,tau\n";
    char line[200];
    for (std::size_t g = 0; g < result.trace.generations.size(); ++g) {
      const TraceRecord& rec = result.trace.generations[g];
      char name[64];
      std::snprintf(name, sizeof name, "polygon_%04zu.json", g);
      save_polygon((fs::path(options.out_dir) / name).string(),
                   {rec.polygon, "generation " + std::to_string(g)});
      for (int i = 0; i < rec.signature.size(); ++i) {
        const auto& v = rec.signature.entries[i];
        std::snprintf(line, sizeof line, "%zu,%d,%.17g,%.17g,%.17g\n", g,
                      i + rec.signature.offset, v.kappa, v.kappa_bar, v.tau);
        csv << line;
      }
      if (options.svg) {
        std::snprintf(name, sizeof name, "polygon_%04zu.svg", g);
        std::ofstream svg(fs::path(options.out_dir) / name);
        svg << render_polygon_svg(rec.polygon);
      }
    }
  }

  json summary;
  summary["flow"] = flow_kind_name(params.kind);
  summary["generations"] = result.trace.generations.size() - 1;
  summary["stop_reason"] = result.trace.stop_reason;
  summary["stable"] = result.report.stable;
  if (result.report.first_stable_generation)
    summary["first_stable_generation"] = *result.report.first_stable_generation;
  if (result.report.periodic) {
    summary["periodic"] = {{"period", result.report.periodic->period},
                           {"cyclic_shift", result.report.periodic->cyclic_shift}};
  }
  summary["residual"] = result.report.residual;
  std::cout << summary.dump(2) << "\n";
  if (!options.out_dir.empty()) {
    std::ofstream out(fs::path(options.out_dir) / "summary.json");
    out << summary.dump(2) << "\n";
  }
  // No-convergence is diagnostic, not a failure; flow-domain errors have
  // already thrown by now.
  return kExitMatch;
}

int cmd_match(const std::string& path_p, const std::string& path_q,
              const std::string& mode_name, bool reversal, const Tolerances& tol) {
  const PolygonDocument p = load_polygon(path_p);
  const PolygonDocument q = load_polygon(path_q);
  MatchMode mode;
  if (mode_name == "affine2")
    mode = MatchMode::affine2;
  else if (mode_name == "centroaffine3")
    mode = MatchMode::centroaffine3;
  else
    raise(ErrorCode::InvalidArgument, "mode must be affine2 or centroaffine3");

  MatchOptions options;
  options.search_reversal = reversal;
  options.signature_tolerance = tol.signature;
  const MatchReport report = match_polygons(p.polygon, q.polygon, mode, options, tol);

  json out;
  out["matched"] = report.matched;
  out["shift"] = report.shift;
  out["reversed"] = report.reversed;
  out["signature_residual"] = report.signature_residual;
  out["geometric_residual"] = report.geometric_residual;
  if (report.transform) out["transform"] = affine_map_json(*report.transform);
  std::cout << out.dump(2) << "\n";
  return report.matched ? kExitMatch : kExitNegative;
}

int cmd_generate(const std::string& kind, int p, int l, const std::string& out_path) {
  Polygon polygon = [&] {
    if (kind == "regular") return generate_regular(p, l);
    if (kind == "constant-space") return generate_constant_space(p, l);
    raise(ErrorCode::InvalidArgument, "kind must be regular or constant-space");
  }();
  const PolygonDocument doc{std::move(polygon),
                            kind + " p=" + std::to_string(p) + " l=" + std::to_string(l)};
  if (out_path.empty())
    std::cout << emit_polygon_json(doc);
  else
    save_polygon(out_path, doc);
  return kExitMatch;
}

int cmd_reproduce(int table) {
  const tables::TableReport report = tables::reproduce_table(table);
  std::cout << tables::format_report(report);
  return report.all_pass() ? kExitMatch : kExitNegative;
}

int cmd_check(const std::string& path, const Tolerances& tol) {
  const PolygonDocument doc = load_polygon(path);
  const Polygon& poly = doc.polygon;
  const Signature sig = compute_signature(poly, tol);

  std::cout << "dimension: " << poly.dimension() << "\n"
            << "closed: " << (poly.closed() ? "yes" : "no") << "\n"
            << "vertices: " << poly.size() << "\n";

  if (poly.closed()) {
    const ClosureReport closure = closure_check(sig, tol);
    std::printf("chain closure defect: %.3e (%s)\n", closure.matrix_product_defect,
                closure.is_closed ? "closed" : "NOT closed");
    std::printf("kappa product: %.12f\n", closure.kappa_product);
    if (closure.predicts_centrosymmetric)
      std::cout << "constant space invariants: centrosymmetric closure\n";
  }
  if (poly.dimension() == 3) {
    std::cout << "planar (all |tau| < tolerance): "
              << (is_planar(sig, tol) ? "yes" : "no") << "\n";
  }
  if (poly.dimension() == 2 && poly.closed()) {
    const ConvexityReport conv = convexity_check(poly, tol);
    std::cout << "simple: " << (conv.is_simple ? "yes" : "no") << "\n"
              << "convex: " << (conv.is_convex ? "yes" : "no") << "\n";
    if (conv.is_parallelogram) std::cout << "parallelogram: yes\n";
  }
  std::cout << format_signature_table(sig);
  return kExitMatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete centroaffine polygon invariants, flows and matching"};
  app.require_subcommand(1);

  const Tolerances tol = tolerances_from_env();

  // invariants
  std::string inv_file, inv_csv;
  auto* invariants = app.add_subcommand("invariants", "per-vertex invariant table");
  invariants->add_option("file", inv_file, "polygon JSON")->required();
  invariants->add_option("--csv", inv_csv, "write full-precision CSV here");

  // flow
  FlowCliOptions flow_options;
  auto* flow = app.add_subcommand("flow", "run a polygon flow with stability probe");
  flow->add_option("--kind", flow_options.kind,
                   "transversal|tangent|proportional|pentagram|inverse-pentagram|endpoint")
      ->required();
  flow->add_option("--param", flow_options.params, "flow parameter k=v");
  flow->add_option("--input", flow_options.input, "polygon JSON (otherwise random)");
  flow->add_option("--gens", flow_options.generations, "max generations");
  flow->add_option("--max-period", flow_options.max_period, "periodicity search bound");
  flow->add_option("--seed", flow_options.seed, "random seed");
  flow->add_option("--dim", flow_options.dim, "random polygon dimension");
  flow->add_option("--vertices", flow_options.vertices, "random polygon size");
  flow->add_option("--out", flow_options.out_dir, "trace output directory");
  flow->add_flag("--svg", flow_options.svg, "emit per-generation SVG snapshots");

  // match
  std::string match_p, match_q, match_mode;
  bool match_reversal = false;
  auto* match = app.add_subcommand("match", "signature-based equivalence detection");
  match->add_option("P", match_p, "first polygon JSON")->required();
  match->add_option("Q", match_q, "second polygon JSON")->required();
  match->add_option("--mode", match_mode, "affine2|centroaffine3")->required();
  match->add_flag("--reversal", match_reversal, "also search reversed orientation");

  // generate
  std::string gen_kind = "regular", gen_out;
  int gen_p = 7, gen_l = 1;
  auto* generate = app.add_subcommand("generate", "canonical constant-invariant polygons");
  generate->add_option("--kind", gen_kind, "regular|constant-space");
  generate->add_option("--p", gen_p, "period")->required();
  generate->add_option("--l", gen_l, "winding (coprime to p)");
  generate->add_option("--out", gen_out, "output file (default stdout)");

  // reproduce
  int repro_table = 0;
  auto* reproduce = app.add_subcommand("reproduce", "rerun a published experiment");
  reproduce->add_option("--table", repro_table, "table number 1..5")->required();

  // check
  std::string check_file;
  auto* check = app.add_subcommand("check", "closure/convexity/planarity report");
  check->add_option("file", check_file, "polygon JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (invariants->parsed()) return cmd_invariants(inv_file, inv_csv, tol);
    if (flow->parsed()) return cmd_flow(flow_options, tol);
    if (match->parsed())
      return cmd_match(match_p, match_q, match_mode, match_reversal, tol);
    if (generate->parsed()) return cmd_generate(gen_kind, gen_p, gen_l, gen_out);
    if (reproduce->parsed()) return cmd_reproduce(repro_table);
    if (check->parsed()) return cmd_check(check_file, tol);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
