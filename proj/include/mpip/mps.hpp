#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mpip {

// All MPS reader failures derive from MpsError, so callers can distinguish a
// malformed file from a programming error.
class MpsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MpsParseError : public MpsError {
 public:
  MpsParseError(int line, const std::string& msg)
      : MpsError("mps parse error at line " + std::to_string(line) + ": " +
                 msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Legal MPS constructs this reader deliberately does not handle
// (integer bounds, maximization, markers, ...).
class MpsUnsupportedError : public MpsError {
 public:
  MpsUnsupportedError(int line, const std::string& msg)
      : MpsError("unsupported mps feature at line " + std::to_string(line) +
                 ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// References to names that were never declared.
class MpsSemanticError : public MpsError {
 public:
  using MpsError::MpsError;
};

// Conversion-level problems (contradictory bounds, non-finite data).
class ModelError : public MpsError {
 public:
  using MpsError::MpsError;
};

enum class RowType { objective, less_equal, greater_equal, equality };
enum class BoundType { lower, upper, fixed, free, minus_infinity, plus_infinity };

struct MpsRow {
  std::string name;
  RowType type;
};

struct MpsColumnEntry {
  std::string column;
  std::string row;
  double value;
};

struct MpsBound {
  BoundType type;
  std::string column;
  std::optional<double> value;
};

struct MpsModel {
  std::string name;
  std::vector<MpsRow> rows;              // file order, including every N row
  std::vector<MpsColumnEntry> columns;   // file order
  std::map<std::string, double> rhs;
  std::map<std::string, double> ranges;
  std::vector<MpsBound> bounds;
  std::string objective_row;             // the designated N row
  std::vector<std::string> column_order; // first-appearance order
  std::vector<std::string> warnings;

  int constraint_row_count() const;      // rows that are not N rows
  int objective_row_count() const;       // number of N rows in the file
};

// Parses a complete MPS document (fixed-format files are read through the
// same whitespace-tolerant field splitting). Never aborts on malformed
// input: every failure is a structured MpsError.
MpsModel parse_mps(std::string_view text);

}  // namespace mpip
