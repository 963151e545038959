#include "mpip/trace.hpp"

#include <ostream>
#include <stdexcept>

namespace mpip {

void ConvergenceTrace::append(const TraceRow& row) {
  if (!rows.empty() && row.k <= rows.back().k)
    throw std::logic_error("trace iterations must be strictly increasing");
  if (rows.empty() && row.k != 0)
    throw std::logic_error("trace must start at iteration 0");
  rows.push_back(row);
}

const char* ConvergenceTrace::csv_header() {
  return "k,primal_rel,dual_rel,mu,alpha_p,alpha_d,cg_iters,mode,t_build,"
         "t_factor,t_cg,t_total";
}

void ConvergenceTrace::write_csv(std::ostream& out) const {
  const auto flags = out.flags();
  out.precision(17);
  out << csv_header() << '\n';
  for (const TraceRow& r : rows) {
    out << r.k << ',' << r.primal_rel << ',' << r.dual_rel << ',' << r.mu
        << ',' << r.alpha_p << ',' << r.alpha_d << ',' << r.cg_iters << ','
        << solve_mode_name(r.mode) << ',' << r.t_build << ',' << r.t_factor
        << ',' << r.t_cg << ',' << r.t_total << '\n';
  }
  out.flags(flags);
}

}  // namespace mpip
