#include "tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "centroflow/centroflow.hpp"

namespace centroflow::tables {

namespace {

// Published experiment inputs and limits.

const std::vector<Vec3> kTable1Pentagon = {
    {10, 22, 1}, {8, 2, 1}, {21, 0, 1}, {37, 2, 1}, {48, 28, 1}};
const double kTable1Kappa0[5] = {0.3529, 0.2197, 6.7931, 2.3401, 0.8113};
const double kTable1KappaBar0[5] = {0.2059, 1.1970, 6.2069, -0.0508, -0.1822};
const double kTable1StableMean = 2.5639;

const std::vector<Vec2> kTable2Heptagon = {{19, 14}, {14, 1}, {15, 6}, {15, 1},
                                           {8, 2},   {13, 16}, {3, 14}};
const double kTable2Kappa0[7] = {0.0577, 0.4167, 7.0, 2.9429, -1.2621, 0.2462, -6.5};
const double kTable2KappaBar0[7] = {-0.3846, -2.0833, -7.2, -0.71429,
                                    -0.233,  -1.7231, 3.75};

const std::vector<Vec3> kTable3Heptagon = {{11, 11, 11}, {2, 9, 3},   {1, 0, 12},
                                           {11, 7, 5},   {16, 3, 13}, {19, 16, 14},
                                           {3, 6, 15}};
const double kTable3Tau0[7] = {-0.6633, -0.9674, 0.3333, 1.7041,
                               -2.4104, -0.2373, 0.8788};
const double kTable3Kappa0[7] = {0.963, 1.1608, -0.8755, 0.7683,
                                 -3.9179, -0.088, -3.8571};
const double kTable3KappaBar0[7] = {-0.8923, -0.5198, 0.2209, -3.3165,
                                    3.403,   -0.528,  5.381};

const double kRegularHeptagonKappaBar = 1.2469796037174672;  // 2 cos(2*pi/7)

const std::vector<Vec2> kTable4Octagon = {{0, 10}, {1, 10}, {2, 8},  {2, 5},
                                          {1, 3},  {0, 3},  {-1, 5}, {-1, 8}};
const double kTable4Kappa[5][8] = {
    {1, 1.5, 1, 0.6667, 1, 1.5, 1, 0.6667},
    {1.5, 1.16667, 0.8571, 0.6667, 1.5, 1.16667, 0.8571, 0.6667},
    {1.5, 1, 0.6667, 1, 1.5, 1, 0.6667, 1},
    {1.5, 0.6667, 0.8333, 1.2, 1.5, 0.6667, 0.8333, 1.2},
    {1, 0.6667, 1, 1.5, 1, 0.6667, 1, 1.5}};
const double kTable4KappaBar[5][8] = {
    {2, 1.5, 1.3333, 1, 2, 1.5, 1.3333, 1},
    {2, 1.3333, 1.1429, 1.3333, 2, 1.3333, 1.1429, 1.3333},
    {2, 1, 1.3333, 1.5, 2, 1, 1.3333, 1.5},
    {1.5, 1, 1.5, 1.8, 1.5, 1, 1.5, 1.8},
    {1.3333, 1, 2, 1.5, 1.3333, 1, 2, 1.5}};

const double kTable5Kappa01[7] = {610.7435, 0.3433, 0.3433, 0.3433,
                                  0.3433,   0.3433, 0.3433};
const double kTable5KappaBar01[7] = {-534.4434, 0.6484, 0.6484, 0.6484,
                                     0.6484,    0.6484, 75.9567};
const double kTable5Tau01[7] = {542.8570, -0.2349, -0.2349, -0.2349,
                                -0.2349,  7.7651,  -67.5432};
const double kTable5Kappa02[7] = {46.4871, 0.5274, 0.5274, 0.5274,
                                  0.5274,  0.5274, 0.5274};
const double kTable5KappaBar02[7] = {-31.1672, 0.8180, 0.8180, 0.8180,
                                     0.8180,   0.8180, 14.7925};
const double kTable5Tau02[7] = {34.8254, -0.1598, -0.1598, -0.1598,
                                -0.1598, 2.8402,  -11.1344};

void add_cell(TableReport& report, std::string label, double expected,
              double computed, double tolerance, bool relative = false) {
  CellCheck cell{std::move(label), expected, computed, tolerance, relative, false};
  const double err = std::abs(computed - expected);
  cell.pass = relative ? err <= tolerance * std::max(1.0, std::abs(expected))
                       : err <= tolerance;
  report.cells.push_back(std::move(cell));
}

void add_bound(TableReport& report, std::string label, double bound,
               double computed) {
  CellCheck cell{std::move(label), bound, computed, bound, false, false};
  cell.pass = std::abs(computed) < bound;
  report.cells.push_back(std::move(cell));
}

Polygon rescaled(const Polygon& polygon) {
  const double s = polygon.coordinate_scale();
  return s > 0 ? polygon.scaled(1.0 / s) : polygon;
}

TableReport reproduce_table1() {
  TableReport report{1, {}};
  Polygon poly = Polygon::closed3(kTable1Pentagon);
  Signature sig = compute_signature(poly);
  for (int i = 0; i < 5; ++i) {
    add_cell(report, "kappa0[" + std::to_string(i) + "]", kTable1Kappa0[i],
             sig.entries[i].kappa, 1e-3);
    add_cell(report, "kappa_bar0[" + std::to_string(i) + "]", kTable1KappaBar0[i],
             sig.entries[i].kappa_bar, 1e-3);
  }

  const TransversalRecipe recipe = TransversalRecipe::mean_curvatures();
  int reached = -1;
  double a1 = 0.0;
  double a2 = 0.0;
  for (int gen = 0; gen <= 60; ++gen) {
    const auto a = recipe.coefficients(sig);
    a1 = a[0];
    a2 = a[1];
    if (std::abs(a1 - a2) < 1e-4 && reached < 0) {
      reached = gen;
      break;
    }
    const auto betas = planarity_betas(sig, poly, recipe);
    poly = rescaled(transversal_step(poly, betas).polygon);
    sig = compute_signature(poly);
  }
  add_cell(report, "stable mean kappa (a1)", kTable1StableMean, a1, 1e-2);
  add_cell(report, "stable mean kappa_bar (a2)", kTable1StableMean, a2, 1e-2);
  add_cell(report, "stabilization generation <= 60", 1.0, reached >= 0 ? 1.0 : 0.0,
           0.5);
  return report;
}

TableReport reproduce_table2() {
  TableReport report{2, {}};
  Polygon poly = Polygon::closed2(kTable2Heptagon);
  Signature sig = compute_signature(poly);
  for (int i = 0; i < 7; ++i) {
    add_cell(report, "kappa0[" + std::to_string(i) + "]", kTable2Kappa0[i],
             sig.entries[i].kappa, 1e-3);
    add_cell(report, "kappa_bar0[" + std::to_string(i) + "]", kTable2KappaBar0[i],
             sig.entries[i].kappa_bar, 1e-3);
  }
  for (int gen = 0; gen < 80; ++gen) {
    poly = rescaled(proportional_step(poly, 0.8).polygon);
  }
  sig = compute_signature(poly);
  for (int i = 0; i < 7; ++i) {
    add_cell(report, "limit kappa[" + std::to_string(i) + "]", 1.0,
             sig.entries[i].kappa, 1e-3);
    add_cell(report, "limit kappa_bar[" + std::to_string(i) + "]",
             kRegularHeptagonKappaBar, sig.entries[i].kappa_bar, 1e-3);
  }
  return report;
}

TableReport reproduce_table3() {
  TableReport report{3, {}};
  Polygon poly = Polygon::closed3(kTable3Heptagon);
  Signature sig = compute_signature(poly);
  for (int i = 0; i < 7; ++i) {
    add_cell(report, "tau0[" + std::to_string(i) + "]", kTable3Tau0[i],
             sig.entries[i].tau, 1e-3);
    add_cell(report, "kappa0[" + std::to_string(i) + "]", kTable3Kappa0[i],
             sig.entries[i].kappa, 1e-3);
    add_cell(report, "kappa_bar0[" + std::to_string(i) + "]", kTable3KappaBar0[i],
             sig.entries[i].kappa_bar, 1e-3);
  }
  for (int gen = 0; gen < 40; ++gen)
    poly = rescaled(proportional_step(poly, 0.4).polygon);
  sig = compute_signature(poly);
  double max_tau = 0.0;
  for (const auto& v : sig.entries) max_tau = std::max(max_tau, std::abs(v.tau));
  add_bound(report, "max |tau^40|", 1e-6, max_tau);
  for (int gen = 40; gen < 60; ++gen)
    poly = rescaled(proportional_step(poly, 0.4).polygon);
  sig = compute_signature(poly);
  for (int i = 0; i < 7; ++i) {
    add_cell(report, "limit kappa[" + std::to_string(i) + "]", 1.0,
             sig.entries[i].kappa, 1e-3);
    add_cell(report, "limit kappa_bar[" + std::to_string(i) + "]",
             kRegularHeptagonKappaBar, sig.entries[i].kappa_bar, 1e-3);
  }
  return report;
}

TableReport reproduce_table4() {
  TableReport report{4, {}};
  Polygon poly = Polygon::closed2(kTable4Octagon);
  Signature first = compute_signature(poly);
  for (int gen = 0; gen <= 4; ++gen) {
    const Signature sig = compute_signature(poly);
    for (int i = 0; i < 8; ++i) {
      add_cell(report,
               "kappa" + std::to_string(gen) + "[" + std::to_string(i) + "]",
               kTable4Kappa[gen][i], sig.entries[i].kappa, 1e-3);
      add_cell(report,
               "kappa_bar" + std::to_string(gen) + "[" + std::to_string(i) + "]",
               kTable4KappaBar[gen][i], sig.entries[i].kappa_bar, 1e-3);
    }
    if (gen < 4) poly = inverse_pentagram_step(poly).polygon;
  }
  const auto [dist, shift] =
      signature_distance(first, compute_signature(poly), /*cyclic=*/true);
  add_cell(report, "gen4 vs gen0 cyclic distance", 0.0, dist, 1e-9);
  add_cell(report, "gen4 vs gen0 cyclic shift", 2.0, shift, 0.5);
  return report;
}

struct EndpointLimit {
  Signature signature;
  int generations = 0;
};

EndpointLimit endpoint_limit(double c, std::uint64_t seed) {
  Rng rng(seed);
  FlowParameters params;
  params.kind = FlowKind::endpoint;
  params.c = c;
  Tolerances tol;
  tol.stability = 1e-10;
  const Polygon start = random_admissible_polygon(rng, 3, 7);
  const ProbeResult probe = stability_probe(params, start, 5000, 1, tol);
  return {probe.trace.generations.back().signature,
          static_cast<int>(probe.trace.generations.size()) - 1};
}

TableReport reproduce_table5() {
  TableReport report{5, {}};
  for (const double c : {0.1, 0.2}) {
    const EndpointLimit a = endpoint_limit(c, 20240001);
    const EndpointLimit b = endpoint_limit(c, 20240002);
    const double* kappa = c == 0.1 ? kTable5Kappa01 : kTable5Kappa02;
    const double* kappa_bar = c == 0.1 ? kTable5KappaBar01 : kTable5KappaBar02;
    const double* tau = c == 0.1 ? kTable5Tau01 : kTable5Tau02;

    // The published rows start at the large-entry vertex; align the computed
    // limit, whose distinguished vertex position depends on the seed only
    // through a cyclic rotation.
    const auto align = [&](const Signature& sig) {
      int best = 0;
      double best_mag = -1.0;
      for (int i = 0; i < sig.size(); ++i)
        if (std::abs(sig.entries[i].kappa) > best_mag) {
          best_mag = std::abs(sig.entries[i].kappa);
          best = i;
        }
      Signature out = sig;
      for (int i = 0; i < sig.size(); ++i)
        out.entries[i] = sig.entries[(best + i) % sig.size()];
      return out;
    };
    const Signature sa = align(a.signature);
    const Signature sb = align(b.signature);

    const std::string pc = c == 0.1 ? "c=0.1 " : "c=0.2 ";
    for (int i = 0; i < 7; ++i) {
      add_cell(report, pc + "kappa[" + std::to_string(i) + "]", kappa[i],
               sa.entries[i].kappa, 1e-2, /*relative=*/true);
      add_cell(report, pc + "kappa_bar[" + std::to_string(i) + "]", kappa_bar[i],
               sa.entries[i].kappa_bar, 1e-2, /*relative=*/true);
      add_cell(report, pc + "tau[" + std::to_string(i) + "]", tau[i],
               sa.entries[i].tau, 1e-2, /*relative=*/true);
    }
    double seed_gap = 0.0;
    for (int i = 0; i < 7; ++i) {
      const auto rel = [](double x, double y) {
        return std::abs(x - y) / std::max(1.0, std::abs(x));
      };
      seed_gap = std::max({seed_gap, rel(sa.entries[i].kappa, sb.entries[i].kappa),
                           rel(sa.entries[i].kappa_bar, sb.entries[i].kappa_bar),
                           rel(sa.entries[i].tau, sb.entries[i].tau)});
    }
    add_bound(report, pc + "cross-seed limit agreement", 1e-4, seed_gap);
  }
  return report;
}

}  // namespace

bool TableReport::all_pass() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const CellCheck& c) { return c.pass; });
}

TableReport reproduce_table(int which) {
  switch (which) {
    case 1: return reproduce_table1();
    case 2: return reproduce_table2();
    case 3: return reproduce_table3();
    case 4: return reproduce_table4();
    case 5: return reproduce_table5();
    default:
      raise(ErrorCode::InvalidArgument, "table must be 1..5");
  }
}

std::string format_report(const TableReport& report) {
  std::string out = "table " + std::to_string(report.table) + "\n";
  char line[200];
  for (const auto& cell : report.cells) {
    std::snprintf(line, sizeof line, "  [%s] %-34s expected %12.4f  computed %12.4f\n",
                  cell.pass ? "ok" : "FAIL", cell.label.c_str(), cell.expected,
                  cell.computed);
    out += line;
  }
  out += report.all_pass() ? "  all cells pass\n" : "  FAILURES present\n";
  return out;
}

}  // namespace centroflow::tables
