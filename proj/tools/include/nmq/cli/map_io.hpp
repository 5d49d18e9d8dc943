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

#ifndef NMQ_CLI_MAP_IO_HPP
#define NMQ_CLI_MAP_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "nmq/map_algebra.hpp"

namespace nmq::cli {

// Map file format (field names contractual):
//   {"dim": d, "form": "A" | "B", "entries": [[re, im], ...]}
// entries is the row-major list of the d^2 x d^2 supermatrix.

nlohmann::json matrix_to_entries(const Matrix& m);
Matrix entries_to_matrix(const nlohmann::json& entries, Index rows, Index cols,
                         const std::string& what);

nlohmann::json map_to_json(const AForm& a);
nlohmann::json map_to_json(const BForm& b);

using AnyMap = std::variant<AForm, BForm>;

AnyMap map_from_json(const nlohmann::json& j);
AnyMap load_map(const std::string& path);
void save_map(const std::string& path, const nlohmann::json& j);

/// Either form, viewed as both.
AForm as_a(const AnyMap& m);
BForm as_b(const AnyMap& m);

}  // namespace nmq::cli

#endif  // NMQ_CLI_MAP_IO_HPP
