#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mpip/matrix.hpp"
#include "mpip/mps.hpp"

namespace mpip {

// min c^T x  s.t.  A x = b, x >= 0, with a dense A. Zero rows and dependent
// rows are permitted; no full-rank assumption is made.
struct StandardFormLP {
  int m = 0;
  int n = 0;
  MatrixF64 a;
  VectorF64 b;
  VectorF64 c;
};

// Reversible record of how the original model was mapped onto standard form.
struct VariableMap {
  enum class Kind { direct, shifted, split, slack };

  struct Entry {
    std::string name;        // original column name
    Kind kind = Kind::direct;
    int column = -1;         // standard-form column (positive part for split)
    int negative_column = -1;
    double shift = 0.0;      // original = standard + shift (shifted kind)
  };

  int n = 0;                                // standard-form column count
  std::vector<Entry> variables;             // original columns, declaration order
  std::vector<Kind> column_kind;            // classification of every standard column
  std::vector<std::string> row_names;       // original constraint rows kept, in order
  std::vector<int> row_slack_column;        // per kept row; -1 when none
  double objective_constant = 0.0;          // reported objective = c^T x + constant
  std::vector<std::string> warnings;
};

// L/G rows gain slack/surplus columns, RANGES become bounded slacks, finite
// lower bounds are shifted into b, finite upper bounds become extra equality
// rows with a fresh slack, and free variables are split. Zero rows are kept
// unless drop_zero_rows is set (then only all-zero rows with zero rhs go).
std::pair<StandardFormLP, VariableMap> to_standard_form(
    const MpsModel& model, bool drop_zero_rows = false);

// Inverts shifts and splits; slack columns are omitted from the output.
std::map<std::string, double> recover_original_solution(const VariableMap& map,
                                                        const VectorF64& x);

// Debug dump: header line "m n", then A row-major, then b, then c.
void dump_standard_form(std::ostream& out, const StandardFormLP& lp);

}  // namespace mpip
