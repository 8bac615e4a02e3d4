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

#include <cstdint>
#include <vector>

#include "holant/signature_graph.hpp"
#include "holant/weighted_graph.hpp"

namespace holant {

enum class Strategy {
  kPlain,         // every assignment of the free edges
  kSupportFirst,  // backtracking over per-vertex support lists
};

struct EnumerationOptions {
  std::size_t max_edges = 28;  // free (non-fixed) edges
  Strategy strategy = Strategy::kSupportFirst;
};

// val(x) = prod_v f_v(x restricted to I(v)). x has one entry (0/1) per edge.
Scalar val(const SignatureGraph& g, const std::vector<std::uint8_t>& x);

// sum_x w(x) val(x) over all assignments of a closed graph.
Scalar holant(const SignatureGraph& g, const EnumerationOptions& opt = {});

// Same sum, restricted to assignments agreeing with `fixed` where fixed[e] is
// 0 or 1 (entries of -1 are summed over). Dangling edges must be fixed.
Scalar holant_fixed(const SignatureGraph& g, const std::vector<std::int8_t>& fixed,
                    const EnumerationOptions& opt = {});

// HW=1 at every vertex: the weighted perfect matching sum.
Scalar perfmatch_via_holant(const WeightedGraph& g, const EnumerationOptions& opt = {});

}  // namespace holant
