#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace emhd {

// Comma-separated output with a mandatory header and 17 significant digits.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header);

  void row(std::initializer_list<double> values);
  void row(const std::vector<double>& values);
  // Mixed rows, e.g. a boolean column: cells are formatted by the caller.
  void raw_row(const std::vector<std::string>& cells);

  static std::string format(double v);

 private:
  std::ostream& out_;
  std::size_t width_;
};

}  // namespace emhd
