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

#include "qfic/csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qfic/common.hpp"

namespace qfic {

std::string format_csv_double(double x) {
  if (std::isnan(x)) return "";
  if (x == 0.0) return "0";
  const double ax = std::abs(x);
  char buf[64];
  if (ax < 1e-4) {
    std::snprintf(buf, sizeof buf, "%.11e", x);
  } else {
    int decimals = 11 - static_cast<int>(std::floor(std::log10(ax)));
    if (decimals < 0) decimals = 0;
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  }
  return buf;
}

void CsvTable::add_comment(const std::string& line) {
  comments_.push_back(line);
}

void CsvTable::set_header(std::vector<std::string> columns) {
  header_ = std::move(columns);
}

void CsvTable::add_row(std::vector<std::string> fields) {
  if (!header_.empty() && fields.size() != header_.size()) {
    throw ValidationError("row width does not match the header");
  }
  rows_.push_back(std::move(fields));
}

void CsvTable::write(std::ostream& out) const {
  for (const auto& c : comments_) out << "# " << c << '\n';
  for (size_t i = 0; i < header_.size(); ++i) {
    if (i) out << ',';
    out << header_[i];
  }
  if (!header_.empty()) out << '\n';
  for (const auto& row : rows_) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
}

std::string CsvTable::to_string() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

}  // namespace qfic
