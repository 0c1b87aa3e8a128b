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

#ifndef ALMONOID_CLAIM_HPP_
#define ALMONOID_CLAIM_HPP_

#include <string>
#include <vector>

#include "almonoid/term.hpp"

namespace almonoid {

enum class RelOp : uint8_t { Eq, Leq };

struct Relation {
  Term lhs;
  RelOp op = RelOp::Eq;
  Term rhs;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// A (quasi-)identity: for all assignments of `vars`, if every hypothesis
/// holds then the conclusion holds. `a <= b` is treated as the equation
/// meet(a,b) = a during evaluation.
struct Claim {
  std::string id;
  std::vector<std::string> vars;
  std::vector<Relation> hypotheses;
  Relation conclusion;

  bool uses_one() const {
    for (const auto& h : hypotheses)
      if (h.lhs.uses_one() || h.rhs.uses_one()) return true;
    return conclusion.lhs.uses_one() || conclusion.rhs.uses_one();
  }

  friend bool operator==(const Claim&, const Claim&) = default;
};

std::string print_relation(const Relation& r);

/// Canonical DSL rendering of a claim; reparses to a structurally equal
/// claim.
std::string print_claim(const Claim& c);

}  // namespace almonoid

#endif  // ALMONOID_CLAIM_HPP_
