#pragma once

#include <string>
#include <vector>

namespace centroflow::tables {

/// One compared quantity of a published-experiment rerun.
struct CellCheck {
  std::string label;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;  // absolute unless relative is set
  bool relative = false;
  bool pass = false;
};

struct TableReport {
  int table = 0;
  std::vector<CellCheck> cells;
  bool all_pass() const;
};

/// Reruns the experiment behind one of the published tables (1-5) and
/// compares against the embedded expected values. Random-seeded experiments
/// (tables 2, 3, 5) compare limit rows only; the intermediate rows depend on
/// unpublished seeds.
TableReport reproduce_table(int which);

std::string format_report(const TableReport& report);

}  // namespace centroflow::tables
