#include "ordsym/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace ordsym {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(field);
  for (auto& f : fields) {
    while (!f.empty() && std::isspace(static_cast<unsigned char>(f.front()))) f.erase(f.begin());
    while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back()))) f.pop_back();
  }
  return fields;
}

bool parse_value(const std::string& field, double& out) {
  if (field.empty()) return false;
  char* end = nullptr;
  out = std::strtod(field.c_str(), &end);
  return end == field.c_str() + field.size();
}

}  // namespace

Eigen::VectorXd ingest_csv(std::istream& in, const std::string& column) {
  // Resolve the column selector: integer literal = index, otherwise a name.
  std::int64_t index = 0;
  bool by_name = false;
  if (!column.empty()) {
    char* end = nullptr;
    const long v = std::strtol(column.c_str(), &end, 10);
    if (end == column.c_str() + column.size()) {
      if (v < 0) throw ParseError("column index must be non-negative");
      index = v;
    } else {
      by_name = true;
    }
  }

  std::vector<double> values;
  std::string line;
  std::int64_t line_no = 0;
  bool saw_rows = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line

    if (!saw_rows) {
      saw_rows = true;
      if (by_name) {
        bool found = false;
        for (std::size_t i = 0; i < fields.size(); ++i) {
          if (fields[i] == column) {
            index = static_cast<std::int64_t>(i);
            found = true;
            break;
          }
        }
        if (!found)
          throw ParseError("column '" + column + "' not found in header (line 1)");
        continue;  // header row consumed
      }
      // Index selector: a non-numeric first row is treated as a header.
      double v = 0.0;
      if (static_cast<std::size_t>(index) < fields.size() &&
          !parse_value(fields[static_cast<std::size_t>(index)], v))
        continue;
    }

    if (static_cast<std::size_t>(index) >= fields.size())
      throw ParseError("line " + std::to_string(line_no) + " has " +
                       std::to_string(fields.size()) + " columns, need column " +
                       std::to_string(index));
    double v = 0.0;
    if (!parse_value(fields[static_cast<std::size_t>(index)], v))
      throw ParseError("line " + std::to_string(line_no) + ", column " + std::to_string(index) +
                       ": cannot parse '" + fields[static_cast<std::size_t>(index)] + "'");
    values.push_back(v);
  }
  if (values.empty()) throw EmptySeries("no data rows");
  return Eigen::Map<const Eigen::VectorXd>(values.data(),
                                           static_cast<Eigen::Index>(values.size()));
}

Eigen::VectorXd ingest_csv_file(const std::string& path, const std::string& column) {
  std::ifstream in(path);
  if (!in) throw FileNotFound("cannot open " + path);
  return ingest_csv(in, column);
}

Eigen::VectorXd log_returns(Eigen::Ref<const Eigen::VectorXd> series) {
  if (series.size() < 2) throw SeriesTooShort("need at least 2 values for log returns");
  for (Eigen::Index i = 0; i < series.size(); ++i)
    if (!(series[i] > 0.0))
      throw NonPositiveValue("non-positive value at index " + std::to_string(i));
  Eigen::VectorXd out(series.size() - 1);
  for (Eigen::Index i = 0; i + 1 < series.size(); ++i)
    out[i] = std::log(series[i + 1]) - std::log(series[i]);
  return out;
}

Eigen::VectorXd first_difference(Eigen::Ref<const Eigen::VectorXd> series) {
  if (series.size() < 2) throw SeriesTooShort("need at least 2 values for differences");
  return series.tail(series.size() - 1) - series.head(series.size() - 1);
}

}  // namespace ordsym
