// Copyright 2026 The qfi-conveyor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFIC_CSV_HPP_
#define QFIC_CSV_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace qfic {

// Deterministic float formatting for golden-file comparisons: 12
// significant digits, scientific below 1e-4, '.' decimal separator, NaN
// mapped to the empty field.
std::string format_csv_double(double x);

// Comma-separated table with '#'-prefixed comment lines (the config echo)
// ahead of a single header row. Rows hold pre-formatted fields.
class CsvTable {
 public:
  void add_comment(const std::string& line);
  void set_header(std::vector<std::string> columns);
  void add_row(std::vector<std::string> fields);

  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  const std::vector<std::string>& header() const { return header_; }

  void write(std::ostream& out) const;
  std::string to_string() const;

 private:
  std::vector<std::string> comments_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace qfic

#endif  // QFIC_CSV_HPP_
