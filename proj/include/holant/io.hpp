// Copyright 2026 The holant-toolkit Authors
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

// JSON file formats (see FORMATS.md). Readers accept the documented forms
// and throw FormatError with a JSON pointer to the offending value; syntax
// errors carry line and column.

#include <string>
#include <vector>

#include "json.hpp"

#include "holant/error.hpp"
#include "holant/gate.hpp"
#include "holant/genus.hpp"
#include "holant/gridtiling.hpp"
#include "holant/matrix.hpp"
#include "holant/signature_graph.hpp"

namespace holant::io {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& source = "<input>");
void write_json_file(const std::string& path, const Json& j);

// Reads path and applies parse; semantic errors are prefixed with the path.
template <class F>
auto read_file_as(const std::string& path, F&& parse) {
  Json j = read_json_file(path);
  try {
    return parse(j);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Scalar scalar_from_json(const Json& j, const std::string& where = "");
Json scalar_to_json(const Scalar& s);

// arity_hint fills in a missing "arity" (the vertex degree in graph files).
Signature signature_from_json(const Json& j, const std::string& where = "", std::size_t arity_hint = 0);
Json signature_to_json(const Signature& s);

SignatureGraph graph_from_json(const Json& j);
Json graph_to_json(const SignatureGraph& g);

struct GateFile {
  Gate gate;
  std::optional<Signature> target;
};
GateFile gate_from_json(const Json& j);
Json gate_to_json(const Gate& g, const std::optional<Signature>& target = std::nullopt);

Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);

PlaneModel plane_model_from_json(const Json& j);
Json plane_model_to_json(const PlaneModel& pm);

GridTilingInstance gridtiling_from_json(const Json& j);
Json gridtiling_to_json(const GridTilingInstance& t);

ColoredGraph colored_graph_from_json(const Json& j);
Json colored_graph_to_json(const ColoredGraph& g);

PartitionedSubInstance psub_from_json(const Json& j);
Json psub_to_json(const PartitionedSubInstance& p);

}  // namespace holant::io
