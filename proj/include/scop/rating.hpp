#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "scop/errors.hpp"

namespace scop::ingest {

enum class Layout { wide, long_form };

Layout parse_layout(const std::string& name);  // "wide" | "long"

// A rectangular matrix of 7-point ratings: rows are exemplars or
// properties, columns are contexts. Every cell is present and lies in
// [0, 7]. Values keep full precision; rounding happens only at display.
class RatingTable {
 public:
  RatingTable() = default;
  RatingTable(std::vector<std::string> row_labels,
              std::vector<std::string> column_labels,
              std::vector<std::vector<double>> cells);

  // wide:  header "label,<ctx1>,...,<ctxK>", one row per label
  // long:  lines "label,context,rate"; the table must come out rectangular
  static RatingTable from_csv(std::istream& in, Layout layout);
  static RatingTable from_csv_file(const std::string& path, Layout layout);

  std::string to_csv(Layout layout) const;  // bit-exact round trip

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& column_labels() const { return column_labels_; }
  bool has_row(const std::string& label) const;
  bool has_column(const std::string& label) const;
  double at(const std::string& row, const std::string& column) const;
  double cell(std::size_t r, std::size_t c) const { return cells_[r][c]; }

  bool operator==(const RatingTable& other) const;

 private:
  std::size_t row_index(const std::string& label) const;
  std::size_t column_index(const std::string& label) const;

  std::vector<std::string> row_labels_;
  std::vector<std::string> column_labels_;
  std::vector<std::vector<double>> cells_;
  std::map<std::string, std::size_t> row_index_;
  std::map<std::string, std::size_t> column_index_;
};

// weight = rating / 7, full precision.
std::map<std::string, double> ratings_to_weights(const RatingTable& t,
                                                 const std::string& column);

// frequency = rating / column sum; the frequencies sum to 1.
// DegenerateColumnError when the column sums to zero.
std::map<std::string, double> ratings_to_frequencies(const RatingTable& t,
                                                     const std::string& column);

// Two-column id/label file (header "id,label").
struct LabelTable {
  std::vector<std::pair<std::string, std::string>> entries;

  static LabelTable from_csv(std::istream& in);
  static LabelTable from_csv_file(const std::string& path);
  bool has(const std::string& id) const;
  const std::string& label(const std::string& id) const;
};

}  // namespace scop::ingest
