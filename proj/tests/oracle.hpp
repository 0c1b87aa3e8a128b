//  Copyright 2026 The almonoid Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef ALMONOID_TESTS_ORACLE_HPP_
#define ALMONOID_TESTS_ORACLE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "almonoid/finite_algebra.hpp"
#include "almonoid/model.hpp"
#include "almonoid/report.hpp"

// Independent brute-force oracle: every catalog claim re-implemented as a
// hand-written nested loop over model operations, with no Term machinery
// and no parser. Iteration order and skip accounting mirror the claim
// engine so verdicts are directly comparable.
namespace oracle {

struct Outcome {
  almonoid::Verdict verdict = almonoid::Verdict::Holds;
  std::optional<almonoid::Assignment> witness;
  uint64_t checked = 0;
  uint64_t skipped = 0;
};

// Claim ids the oracle knows (the whole built-in catalog).
const std::vector<std::string>& claim_ids();

Outcome check(const almonoid::Model& m, const std::string& claim_id);

// Re-evaluates a claim at a specific assignment: true iff the hypotheses
// hold and the conclusion is violated (i.e. the assignment is a genuine
// counterexample). Unevaluable assignments are not violations.
bool witness_violates(const almonoid::Model& m, const std::string& claim_id,
                      const almonoid::Assignment& w);

// Direct nested-loop check of the four defining axiom families on a finite
// model; returns the first violated law name, or nullopt.
std::optional<std::string> al_monoid_violation(const almonoid::FiniteAlgebra& a);

}  // namespace oracle

#endif  // ALMONOID_TESTS_ORACLE_HPP_
