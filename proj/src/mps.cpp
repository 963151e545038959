#include "mpip/mps.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace mpip {

int MpsModel::constraint_row_count() const {
  int n = 0;
  for (const auto& r : rows)
    if (r.type != RowType::objective) ++n;
  return n;
}

int MpsModel::objective_row_count() const {
  int n = 0;
  for (const auto& r : rows)
    if (r.type == RowType::objective) ++n;
  return n;
}

namespace {

enum class Section {
  none,
  name,
  objsense,
  rows,
  columns,
  rhs,
  ranges,
  bounds,
  endata
};

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

double parse_number(const std::string& tok, int line) {
  // NETLIB-era files occasionally use Fortran 'D' exponents.
  std::string t = tok;
  for (char& c : t)
    if (c == 'd' || c == 'D') c = 'E';
  const char* begin = t.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw MpsParseError(line, "expected a number, got '" + tok + "'");
  return v;
}

struct Parser {
  MpsModel model;
  std::unordered_map<std::string, RowType> row_types;
  std::unordered_set<std::string> declared_columns;
  std::set<std::pair<std::string, std::string>> seen_entries;
  Section section = Section::none;
  bool saw_endata = false;
  int line_no = 0;

  void require_row(const std::string& name) const {
    if (!row_types.count(name))
      throw MpsSemanticError("reference to undeclared row '" + name +
                             "' at line " + std::to_string(line_no));
  }

  void require_column(const std::string& name) const {
    if (!declared_columns.count(name))
      throw MpsSemanticError("reference to undeclared column '" + name +
                             "' at line " + std::to_string(line_no));
  }

  void header(const std::vector<std::string>& tok) {
    const std::string key = upper(tok[0]);
    if (key == "NAME") {
      section = Section::name;
      if (tok.size() > 1) model.name = tok[1];
    } else if (key == "OBJSENSE") {
      section = Section::objsense;
      if (tok.size() > 1) objsense_value(tok[1]);
    } else if (key == "ROWS") {
      section = Section::rows;
    } else if (key == "COLUMNS") {
      section = Section::columns;
    } else if (key == "RHS") {
      section = Section::rhs;
    } else if (key == "RANGES") {
      section = Section::ranges;
    } else if (key == "BOUNDS") {
      section = Section::bounds;
    } else if (key == "ENDATA") {
      section = Section::endata;
      saw_endata = true;
    } else {
      throw MpsUnsupportedError(line_no, "section '" + tok[0] + "'");
    }
  }

  void objsense_value(const std::string& tok) {
    const std::string v = upper(tok);
    if (v == "MAX" || v == "MAXIMIZE" || v == "MAXIM")
      throw MpsUnsupportedError(
          line_no, "OBJSENSE " + tok + " (objectives are minimized; negate "
                                       "the costs to maximize)");
    if (v != "MIN" && v != "MINIMIZE")
      throw MpsParseError(line_no, "unknown OBJSENSE value '" + tok + "'");
  }

  void row_line(const std::vector<std::string>& tok) {
    if (tok.size() != 2)
      throw MpsParseError(line_no, "ROWS line needs a type and a name");
    RowType type;
    const std::string t = upper(tok[0]);
    if (t == "N")
      type = RowType::objective;
    else if (t == "L")
      type = RowType::less_equal;
    else if (t == "G")
      type = RowType::greater_equal;
    else if (t == "E")
      type = RowType::equality;
    else
      throw MpsUnsupportedError(line_no, "row type '" + tok[0] + "'");

    if (row_types.count(tok[1]))
      throw MpsSemanticError("duplicate row '" + tok[1] + "' at line " +
                             std::to_string(line_no));
    row_types.emplace(tok[1], type);
    model.rows.push_back({tok[1], type});
    if (type == RowType::objective) {
      if (model.objective_row.empty())
        model.objective_row = tok[1];
      else
        model.warnings.push_back("additional objective row '" + tok[1] +
                                 "' ignored");
    }
  }

  void column_line(const std::vector<std::string>& tok) {
    for (const auto& t : tok)
      if (upper(t) == "'MARKER'" || upper(t) == "'INTORG'" ||
          upper(t) == "'INTEND'")
        throw MpsUnsupportedError(line_no, "integer markers");
    if (tok.size() != 3 && tok.size() != 5)
      throw MpsParseError(line_no, "COLUMNS line needs (column, row, value) "
                                   "pairs");
    const std::string& col = tok[0];
    if (!declared_columns.count(col)) {
      declared_columns.insert(col);
      model.column_order.push_back(col);
    }
    for (std::size_t i = 1; i + 1 < tok.size(); i += 2) {
      require_row(tok[i]);
      const double v = parse_number(tok[i + 1], line_no);
      if (!seen_entries.emplace(col, tok[i]).second)
        model.warnings.push_back("duplicate entry for column '" + col +
                                 "', row '" + tok[i] + "'; coefficients are "
                                 "summed");
      model.columns.push_back({col, tok[i], v});
    }
  }

  // RHS and RANGES share the same layout: an optional set name followed by
  // (row, value) pairs. An odd token count means the set name is present.
  void rhs_like_line(const std::vector<std::string>& tok,
                     std::map<std::string, double>& dest, const char* what) {
    std::size_t first = tok.size() % 2 == 1 ? 1 : 0;
    if (tok.size() - first < 2)
      throw MpsParseError(line_no, std::string(what) +
                                       " line needs (row, value) pairs");
    for (std::size_t i = first; i + 1 < tok.size(); i += 2) {
      require_row(tok[i]);
      const double v = parse_number(tok[i + 1], line_no);
      auto [it, fresh] = dest.emplace(tok[i], v);
      if (!fresh) {
        model.warnings.push_back(std::string("duplicate ") + what +
                                 " entry for row '" + tok[i] +
                                 "'; the last value wins");
        it->second = v;
      }
    }
  }

  void bound_line(const std::vector<std::string>& tok) {
    if (tok.empty()) return;
    const std::string t = upper(tok[0]);
    BoundType type;
    bool needs_value = true;
    if (t == "LO")
      type = BoundType::lower;
    else if (t == "UP")
      type = BoundType::upper;
    else if (t == "FX")
      type = BoundType::fixed;
    else if (t == "FR") {
      type = BoundType::free;
      needs_value = false;
    } else if (t == "MI") {
      type = BoundType::minus_infinity;
      needs_value = false;
    } else if (t == "PL") {
      type = BoundType::plus_infinity;
      needs_value = false;
    } else if (t == "BV" || t == "LI" || t == "UI") {
      throw MpsUnsupportedError(line_no, "integer bound type '" + tok[0] + "'");
    } else {
      throw MpsUnsupportedError(line_no, "bound type '" + tok[0] + "'");
    }

    // Layouts: (type, set, col, value) / (type, col, value) for valued
    // bounds, (type, set, col) / (type, col) otherwise.
    std::string col;
    std::optional<double> value;
    if (needs_value) {
      if (tok.size() == 4) {
        col = tok[2];
        value = parse_number(tok[3], line_no);
      } else if (tok.size() == 3) {
        col = tok[1];
        value = parse_number(tok[2], line_no);
      } else {
        throw MpsParseError(line_no, "malformed bound line");
      }
    } else {
      if (tok.size() == 3) {
        col = tok[2];
      } else if (tok.size() == 2) {
        col = tok[1];
      } else {
        throw MpsParseError(line_no, "malformed bound line");
      }
    }
    require_column(col);
    model.bounds.push_back({type, col, value});
  }

  void data_line(const std::vector<std::string>& tok) {
    switch (section) {
      case Section::none:
        throw MpsParseError(line_no, "data before any section header");
      case Section::name:
        // stray continuation of the NAME card; ignore
        break;
      case Section::objsense:
        objsense_value(tok[0]);
        break;
      case Section::rows:
        row_line(tok);
        break;
      case Section::columns:
        column_line(tok);
        break;
      case Section::rhs:
        rhs_like_line(tok, model.rhs, "RHS");
        break;
      case Section::ranges:
        rhs_like_line(tok, model.ranges, "RANGES");
        break;
      case Section::bounds:
        bound_line(tok);
        break;
      case Section::endata:
        break;  // trailing content after ENDATA is ignored
    }
  }
};

}  // namespace

MpsModel parse_mps(std::string_view text) {
  Parser p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++p.line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!line.empty() && line[0] != '*') {
      const bool is_header =
          !std::isspace(static_cast<unsigned char>(line[0]));
      const auto tok = tokenize(line);
      if (!tok.empty()) {
        if (is_header)
          p.header(tok);
        else
          p.data_line(tok);
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  if (!p.saw_endata)
    throw MpsParseError(p.line_no, "missing ENDATA");
  if (p.model.objective_row.empty())
    throw MpsSemanticError("no objective (N) row declared");
  return p.model;
}

}  // namespace mpip
