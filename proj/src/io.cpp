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

#include "qnoise/io.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>

namespace qnoise {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  row(columns);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    out_ += cells[i];
  }
  out_ += "\r\n";
}

namespace {

nlohmann::json grid(const Matrix& m,
                    const std::function<double(const Complex&)>& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(f(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json out;
  out["real"] = grid(m, [](const Complex& z) { return z.real(); });
  out["imag"] = grid(m, [](const Complex& z) { return z.imag(); });
  out["magnitude"] = grid(m, [](const Complex& z) { return std::abs(z); });
  return out;
}

Matrix read_unitary_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("matrix file " + path + ": " + e.what());
  }
  if (!j.contains("real") || !j.contains("imag"))
    throw std::runtime_error("matrix file " + path +
                             ": needs \"real\" and \"imag\" grids");
  const auto& re = j["real"];
  const auto& im = j["imag"];
  if (!re.is_array() || re.empty() || !im.is_array() || im.size() != re.size())
    throw std::runtime_error("matrix file " + path + ": malformed grids");
  const Index n = static_cast<Index>(re.size());
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto& rrow = re[i];
    const auto& irow = im[i];
    if (!rrow.is_array() || static_cast<Index>(rrow.size()) != n ||
        !irow.is_array() || static_cast<Index>(irow.size()) != n)
      throw std::runtime_error("matrix file " + path +
                               ": grids must be square");
    for (Index k = 0; k < n; ++k)
      m(i, k) = Complex(rrow[k].get<double>(), irow[k].get<double>());
  }
  if (!is_unitary(m, 1e-10))
    throw std::runtime_error("matrix file " + path + ": matrix is not unitary");
  return m;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace qnoise
