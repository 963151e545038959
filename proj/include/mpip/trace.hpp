#pragma once

#include <iosfwd>
#include <vector>

#include "mpip/normal_eq.hpp"

namespace mpip {

// One line of the convergence record. Residuals are relative with guarded
// denominators max(||b||, 1) and max(||c||, 1).
struct TraceRow {
  int k = 0;
  double primal_rel = 0.0;
  double dual_rel = 0.0;
  double mu = 0.0;
  double alpha_p = 0.0;
  double alpha_d = 0.0;
  int cg_iters = 0;
  SolveMode mode = SolveMode::mixed;
  double t_build = 0.0;
  double t_factor = 0.0;
  double t_cg = 0.0;
  double t_total = 0.0;
};

struct ConvergenceTrace {
  std::vector<TraceRow> rows;

  // Rejects rows whose k is not strictly increasing.
  void append(const TraceRow& row);

  static const char* csv_header();
  void write_csv(std::ostream& out) const;
};

}  // namespace mpip
