// Copyright 2026 The qnoise authors
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

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qnoise/types.hpp"

namespace qnoise {

/// Doubles rendered with 17 significant digits, enough to round-trip.
std::string format_double(double v);

/// RFC 4180 rows: comma separators, CRLF line endings, header first.
class CsvWriter {
 public:
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

/// {"real": [[...]], "imag": [[...]], "magnitude": [[...]]} grids.
nlohmann::json matrix_to_json(const Matrix& m);

/// Reads a matrix from a JSON file with "real" and "imag" grids and
/// validates it is square and unitary (to 1e-10).
Matrix read_unitary_file(const std::string& path);

void write_file(const std::string& path, const std::string& content);

}  // namespace qnoise
