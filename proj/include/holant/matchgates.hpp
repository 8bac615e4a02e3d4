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

#include <string>
#include <vector>

#include "holant/gate.hpp"

namespace holant {

enum class MatchgateName { kGammaPass, kGammaPre, kGammaAct, kDummy };

std::string matchgate_name(MatchgateName n);
std::optional<MatchgateName> matchgate_from_name(const std::string& s);

struct NamedMatchgate {
  MatchgateName name;
  Gate gate;
  Signature target;
  std::vector<std::size_t> apex_dangling;  // labels meant for apex wiring
};

// PASS on weights {-1, 1}; dangling N, E, S, W, outer order 1..4.
NamedMatchgate build_pass_matchgate();
// PRE: PASS core plus two switch chains; labels 5, 6 are off-plane.
NamedMatchgate build_pre_matchgate();
// ACT as an abstract gate: a PRE vertex inside a ring of four PASS vertices
// and a separate edge of weight 1/2. Not flattened.
NamedMatchgate build_act_gate();
// PRE vertex with W and E forced inactive. Labels (N, S, 5, 6).
NamedMatchgate build_dummy_gate();

NamedMatchgate build_matchgate(MatchgateName n);

// Replaces every PASS, PRE and ACT vertex by its matchgate (ACT recursively),
// leaving an all-HW=1 graph when no other signatures occur. Witnesses are
// spliced where possible.
SignatureGraph flatten(const SignatureGraph& g);
Gate flatten(const Gate& g);

struct MatchgateReport {
  std::string name;
  std::size_t arity = 0;
  std::size_t checked = 0;
  struct Row {
    Bits x;
    Scalar got, want;
  };
  std::vector<Row> rows;        // full table
  std::vector<Row> mismatches;  // subset of rows
  bool ok() const { return mismatches.empty(); }
};

// Exhaustive comparison of Sig(gate) with the target.
MatchgateReport verify_matchgate(const NamedMatchgate& m, const EnumerationOptions& opt = {});

}  // namespace holant
