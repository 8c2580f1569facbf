#include "scop/rating.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

namespace scop::ingest {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  cells.push_back(current);
  return cells;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

double parse_rating(const std::string& text, std::size_t line_no,
                    const std::string& row, const std::string& column) {
  std::string t = trim(text);
  const char* begin = t.data();
  const char* end = begin + t.size();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError("line " + std::to_string(line_no) + ", row '" + row +
                     "', column '" + column + "': not a number: '" + t + "'");
  if (!(value >= 0.0 && value <= 7.0))
    throw ParseError("line " + std::to_string(line_no) + ", row '" + row +
                     "', column '" + column + "': rating " + t +
                     " outside [0, 7]");
  return value;
}

std::string format_cell(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // prefer the shortest representation that round-trips
  for (int prec = 1; prec < 17; ++prec) {
    char candidate[40];
    std::snprintf(candidate, sizeof candidate, "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(candidate, "%lf", &back);
    if (back == v) return candidate;
  }
  return buf;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

Layout parse_layout(const std::string& name) {
  if (name == "wide") return Layout::wide;
  if (name == "long") return Layout::long_form;
  throw InputError("unknown table layout: " + name);
}

RatingTable::RatingTable(std::vector<std::string> row_labels,
                         std::vector<std::string> column_labels,
                         std::vector<std::vector<double>> cells)
    : row_labels_(std::move(row_labels)),
      column_labels_(std::move(column_labels)),
      cells_(std::move(cells)) {
  if (cells_.size() != row_labels_.size())
    throw StructureError("cell matrix does not match row labels");
  for (const auto& row : cells_)
    if (row.size() != column_labels_.size())
      throw StructureError("ragged cell matrix");
  for (std::size_t i = 0; i < row_labels_.size(); ++i)
    if (!row_index_.emplace(row_labels_[i], i).second)
      throw StructureError("duplicate row label: " + row_labels_[i]);
  for (std::size_t i = 0; i < column_labels_.size(); ++i)
    if (!column_index_.emplace(column_labels_[i], i).second)
      throw StructureError("duplicate column label: " + column_labels_[i]);
}

RatingTable RatingTable::from_csv(std::istream& in, Layout layout) {
  std::vector<std::string> lines = read_lines(in);
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw StructureError("empty rating table");

  if (layout == Layout::wide) {
    auto header = split_csv_line(lines[0]);
    if (header.size() < 2)
      throw StructureError("wide table header needs at least one context column");
    std::vector<std::string> columns;
    for (std::size_t c = 1; c < header.size(); ++c) {
      std::string name = trim(header[c]);
      if (name.empty()) throw StructureError("empty column label in header");
      columns.push_back(name);
    }
    std::vector<std::string> rows;
    std::vector<std::vector<double>> cells;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
      if (trim(lines[ln]).empty()) continue;
      auto parts = split_csv_line(lines[ln]);
      if (parts.size() != columns.size() + 1)
        throw StructureError("line " + std::to_string(ln + 1) + ": expected " +
                             std::to_string(columns.size() + 1) +
                             " cells, found " + std::to_string(parts.size()));
      std::string label = trim(parts[0]);
      if (label.empty())
        throw StructureError("line " + std::to_string(ln + 1) +
                             ": empty row label");
      std::vector<double> row;
      for (std::size_t c = 1; c < parts.size(); ++c)
        row.push_back(parse_rating(parts[c], ln + 1, label, columns[c - 1]));
      rows.push_back(label);
      cells.push_back(std::move(row));
    }
    if (rows.empty()) throw StructureError("rating table has no data rows");
    return RatingTable(std::move(rows), std::move(columns), std::move(cells));
  }

  // long: label,context,rate triples; must assemble to a full rectangle
  std::vector<std::string> rows, columns;
  std::map<std::string, std::size_t> row_idx, col_idx;
  std::map<std::pair<std::size_t, std::size_t>, double> values;
  std::size_t start = 0;
  {  // optional header line
    auto first = split_csv_line(lines[0]);
    if (first.size() == 3 && trim(first[0]) == "label") start = 1;
  }
  for (std::size_t ln = start; ln < lines.size(); ++ln) {
    if (trim(lines[ln]).empty()) continue;
    auto parts = split_csv_line(lines[ln]);
    if (parts.size() != 3)
      throw StructureError("line " + std::to_string(ln + 1) +
                           ": expected label,context,rate");
    std::string row = trim(parts[0]);
    std::string col = trim(parts[1]);
    if (row.empty() || col.empty())
      throw StructureError("line " + std::to_string(ln + 1) + ": empty label");
    double v = parse_rating(parts[2], ln + 1, row, col);
    auto [ri, row_fresh] = row_idx.emplace(row, rows.size());
    if (row_fresh) rows.push_back(row);
    auto [ci, col_fresh] = col_idx.emplace(col, columns.size());
    if (col_fresh) columns.push_back(col);
    if (!values.emplace(std::make_pair(ri->second, ci->second), v).second)
      throw StructureError("line " + std::to_string(ln + 1) +
                           ": duplicate cell (" + row + ", " + col + ")");
  }
  if (rows.empty()) throw StructureError("rating table has no data rows");
  std::vector<std::vector<double>> cells(rows.size(),
                                         std::vector<double>(columns.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < columns.size(); ++c) {
      auto it = values.find({r, c});
      if (it == values.end())
        throw StructureError("missing cell (" + rows[r] + ", " + columns[c] +
                             ")");
      cells[r][c] = it->second;
    }
  return RatingTable(std::move(rows), std::move(columns), std::move(cells));
}

RatingTable RatingTable::from_csv_file(const std::string& path, Layout layout) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  return from_csv(in, layout);
}

std::string RatingTable::to_csv(Layout layout) const {
  std::ostringstream os;
  if (layout == Layout::wide) {
    os << "label";
    for (const auto& c : column_labels_) os << "," << c;
    os << "\n";
    for (std::size_t r = 0; r < row_labels_.size(); ++r) {
      os << row_labels_[r];
      for (std::size_t c = 0; c < column_labels_.size(); ++c)
        os << "," << format_cell(cells_[r][c]);
      os << "\n";
    }
  } else {
    os << "label,context,rate\n";
    for (std::size_t r = 0; r < row_labels_.size(); ++r)
      for (std::size_t c = 0; c < column_labels_.size(); ++c)
        os << row_labels_[r] << "," << column_labels_[c] << ","
           << format_cell(cells_[r][c]) << "\n";
  }
  return os.str();
}

bool RatingTable::has_row(const std::string& label) const {
  return row_index_.count(label) > 0;
}

bool RatingTable::has_column(const std::string& label) const {
  return column_index_.count(label) > 0;
}

std::size_t RatingTable::row_index(const std::string& label) const {
  auto it = row_index_.find(label);
  if (it == row_index_.end()) throw IdentifierError("unknown row: " + label);
  return it->second;
}

std::size_t RatingTable::column_index(const std::string& label) const {
  auto it = column_index_.find(label);
  if (it == column_index_.end())
    throw IdentifierError("unknown column: " + label);
  return it->second;
}

double RatingTable::at(const std::string& row, const std::string& column) const {
  return cells_[row_index(row)][column_index(column)];
}

bool RatingTable::operator==(const RatingTable& other) const {
  return row_labels_ == other.row_labels_ &&
         column_labels_ == other.column_labels_ && cells_ == other.cells_;
}

std::map<std::string, double> ratings_to_weights(const RatingTable& t,
                                                 const std::string& column) {
  if (!t.has_column(column)) throw IdentifierError("unknown column: " + column);
  std::map<std::string, double> out;
  for (const auto& row : t.row_labels()) out[row] = t.at(row, column) / 7.0;
  return out;
}

std::map<std::string, double> ratings_to_frequencies(const RatingTable& t,
                                                     const std::string& column) {
  if (!t.has_column(column)) throw IdentifierError("unknown column: " + column);
  double total = 0.0;
  for (const auto& row : t.row_labels()) total += t.at(row, column);
  if (total <= 0.0)
    throw DegenerateColumnError("column " + column +
                                " sums to zero; no frequencies");
  std::map<std::string, double> out;
  for (const auto& row : t.row_labels()) out[row] = t.at(row, column) / total;
  return out;
}

LabelTable LabelTable::from_csv(std::istream& in) {
  LabelTable t;
  std::vector<std::string> lines = read_lines(in);
  std::size_t start = 0;
  if (!lines.empty()) {
    auto first = split_csv_line(lines[0]);
    if (!first.empty() && trim(first[0]) == "id") start = 1;
  }
  for (std::size_t ln = start; ln < lines.size(); ++ln) {
    if (trim(lines[ln]).empty()) continue;
    std::size_t comma = lines[ln].find(',');
    if (comma == std::string::npos)
      throw StructureError("line " + std::to_string(ln + 1) +
                           ": expected id,label");
    std::string id = trim(lines[ln].substr(0, comma));
    std::string label = trim(lines[ln].substr(comma + 1));
    if (id.empty() || label.empty())
      throw StructureError("line " + std::to_string(ln + 1) +
                           ": empty id or label");
    for (const auto& [existing, _] : t.entries)
      if (existing == id)
        throw StructureError("duplicate id: " + id);
    t.entries.emplace_back(id, label);
  }
  if (t.entries.empty()) throw StructureError("empty label table");
  return t;
}

LabelTable LabelTable::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  return from_csv(in);
}

bool LabelTable::has(const std::string& id) const {
  for (const auto& [existing, _] : entries)
    if (existing == id) return true;
  return false;
}

const std::string& LabelTable::label(const std::string& id) const {
  for (const auto& [existing, label] : entries)
    if (existing == id) return label;
  throw IdentifierError("unknown id: " + id);
}

}  // namespace scop::ingest
