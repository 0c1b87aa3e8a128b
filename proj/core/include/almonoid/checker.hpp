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

#ifndef ALMONOID_CHECKER_HPP_
#define ALMONOID_CHECKER_HPP_

#include <span>
#include <vector>

#include "almonoid/claim.hpp"
#include "almonoid/model.hpp"
#include "almonoid/report.hpp"

namespace almonoid {

struct CheckOptions {
  int jobs = 1;
  // Assignment spaces smaller than this stay single-threaded.
  uint64_t parallel_threshold = 1 << 14;
};

/// Bottom-up evaluation of a term; env binds variables by index.
Eval eval_term(const Model& m, const Term& t, std::span<const Elem> env);

/// True, false, or not evaluable (OutOfWindow / NoUnity).
Eval eval_relation(const Model& m, const Relation& r, std::span<const Elem> env);

/// Exhaustively enumerates assignments of the claim's variables over the
/// model's domain in deterministic order (lexicographic, first variable
/// slowest). Assignments whose evaluation leaves the window are skipped and
/// counted, downgrading Holds to Inconclusive.
ClaimReport check_claim(const Model& m, const Claim& c,
                        const CheckOptions& opts = {});

/// Runs every built-in catalog claim in catalog order.
std::vector<ClaimReport> run_catalog(const Model& m,
                                     const CheckOptions& opts = {});

}  // namespace almonoid

#endif  // ALMONOID_CHECKER_HPP_
