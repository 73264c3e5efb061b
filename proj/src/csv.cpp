#include "emhd/csv.hpp"

#include <cmath>
#include <cstdio>

#include "emhd/errors.hpp"

namespace emhd {

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header)
    : out_(out), width_(header.size()) {
  if (header.empty()) throw ParameterError("csv header must not be empty");
  raw_row(header);
}

std::string CsvWriter::format(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvWriter::row(std::initializer_list<double> values) {
  row(std::vector<double>(values));
}

void CsvWriter::row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format(v));
  raw_row(cells);
}

void CsvWriter::raw_row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw ShapeError("csv row width does not match header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

}  // namespace emhd
