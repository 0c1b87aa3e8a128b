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

#ifndef ALMONOID_SEARCH_HPP_
#define ALMONOID_SEARCH_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "almonoid/claim.hpp"
#include "almonoid/finite_algebra.hpp"
#include "almonoid/profiles.hpp"
#include "almonoid/report.hpp"

namespace almonoid {

inline constexpr int kSearchSizeCap = 6;
inline constexpr int kCanonicalSizeCap = 8;

struct SearchSpec {
  int size = 2;
  Profile satisfy = Profile::AlMonoid;
  std::optional<std::string> violate;  // claim id or axiom label
  std::optional<uint64_t> limit;
  bool canonical = true;
  int jobs = 1;
};

/// Minimal table serialization over all carrier permutations; two algebras
/// have equal keys iff they are isomorphic. Throws SizeLimitError for
/// n > 8.
std::string canonical_form(const FiniteAlgebra& a);

/// Emits every model of the given size satisfying the profile, in
/// deterministic order (lattice-first: order relations, then monoid tables,
/// then star tables, pruning on literal axiom instances). Models carry a
/// labeling where the order is a linear extension of the index order; with
/// canonical=true, isomorphic duplicates are suppressed.
///
/// The callback returns false to stop the search.
void enumerate_models(const SearchSpec& spec,
                      const std::function<bool(const FiniteAlgebra&)>& emit);

std::vector<FiniteAlgebra> enumerate_all(const SearchSpec& spec);

struct Counterexample {
  FiniteAlgebra model;
  ClaimReport report;
};

/// First enumerated model (sizes 1..spec.size) satisfying the profile on
/// which the claim fails.
std::optional<Counterexample> find_counterexample(const Claim& claim,
                                                  const SearchSpec& spec);
std::optional<Counterexample> find_counterexample(const std::string& claim_id,
                                                  const SearchSpec& spec);

struct IndependenceDirection {
  std::string name;             // e.g. "axiom2"
  bool established = false;
  std::string model;            // builtin uri or serialized tables
  std::vector<std::string> satisfied;  // axiom families with no violation
  std::string violated;         // the independent axiom
  std::optional<Assignment> witness;
  std::vector<std::string> computation;  // step-by-step evaluation chain
  std::string note;
  int search_bound = 0;
};

struct IndependenceReport {
  std::vector<IndependenceDirection> directions;
  std::optional<FiniteAlgebra> witness_model;  // finite witness, when found
};

/// Runs the built-in independence witnesses: IntWithTopBottom(bound) for
/// axiom (2) against (1),(3),(4), and a finite search up to max_size for
/// axiom (4) against (1),(2),(3). The smallest separating model for the
/// axiom-4 direction has five elements.
IndependenceReport independence_report(int window_bound = 20, int max_size = 5);

}  // namespace almonoid

#endif  // ALMONOID_SEARCH_HPP_
