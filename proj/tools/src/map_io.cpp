// Copyright 2026 The nmq Authors.
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

#include "nmq/cli/map_io.hpp"

#include <fstream>

namespace nmq::cli {

using nlohmann::json;

json matrix_to_entries(const Matrix& m) {
  json entries = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index s = 0; s < m.cols(); ++s) {
      entries.push_back({m(r, s).real(), m(r, s).imag()});
    }
  }
  return entries;
}

Matrix entries_to_matrix(const json& entries, Index rows, Index cols,
                         const std::string& what) {
  if (!entries.is_array() ||
      entries.size() != static_cast<size_t>(rows * cols)) {
    throw std::invalid_argument(what + ": expected " +
                                std::to_string(rows * cols) +
                                " [re, im] entries");
  }
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index s = 0; s < cols; ++s) {
      const json& e = entries[static_cast<size_t>(r * cols + s)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
          !e[1].is_number()) {
        throw std::invalid_argument(what + ": entries must be [re, im] pairs");
      }
      m(r, s) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

json map_to_json(const AForm& a) {
  return json{{"dim", a.dim()}, {"form", "A"}, {"entries", matrix_to_entries(a.matrix())}};
}

json map_to_json(const BForm& b) {
  return json{{"dim", b.dim()}, {"form", "B"}, {"entries", matrix_to_entries(b.matrix())}};
}

AnyMap map_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("form") ||
      !j.contains("entries")) {
    throw std::invalid_argument(
        "map JSON must contain \"dim\", \"form\" and \"entries\"");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<Index>() <= 0) {
    throw std::invalid_argument("map JSON: \"dim\" must be a positive integer");
  }
  const Index d = j["dim"].get<Index>();
  const Matrix m = entries_to_matrix(j["entries"], d * d, d * d, "map JSON");
  const std::string form = j["form"].get<std::string>();
  if (form == "A") return AForm(d, m);
  if (form == "B") return BForm(d, m);
  throw std::invalid_argument("map JSON: \"form\" must be \"A\" or \"B\"");
}

AnyMap load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open map file: " + path);
  }
  json j;
  in >> j;
  return map_from_json(j);
}

void save_map(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write map file: " + path);
  }
  out << j.dump(2) << "\n";
}

AForm as_a(const AnyMap& m) {
  if (std::holds_alternative<AForm>(m)) return std::get<AForm>(m);
  return b_to_a(std::get<BForm>(m));
}

BForm as_b(const AnyMap& m) {
  if (std::holds_alternative<BForm>(m)) return std::get<BForm>(m);
  return a_to_b(std::get<AForm>(m));
}

}  // namespace nmq::cli
