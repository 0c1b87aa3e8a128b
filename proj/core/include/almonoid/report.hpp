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

#ifndef ALMONOID_REPORT_HPP_
#define ALMONOID_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "almonoid/element.hpp"

namespace almonoid {

enum class Verdict : uint8_t { Holds, Fails, Inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// A variable assignment, used as a counterexample witness.
using Assignment = std::vector<std::pair<std::string, Elem>>;

std::string to_string(const Assignment& w);

/// Verdict for one claim checked over one model's domain.
///
/// `checked` counts assignments fully evaluated and `skipped` counts those
/// abandoned for OutOfWindow or a missing unity. On a Fails verdict the
/// counts cover the assignments up to and including the witness in
/// deterministic order, so reports are identical for any worker count.
struct ClaimReport {
  std::string id;
  Verdict verdict = Verdict::Holds;
  std::optional<Assignment> witness;
  uint64_t checked = 0;
  uint64_t skipped = 0;
  std::string note;  // e.g. "no-unity"
};

/// One law scanned directly over tables, with a witness tuple on failure.
struct LawViolation {
  std::string law;
  std::vector<Elem> witness;
};

/// Result of a direct structural check (validate_algebra, homomorphism
/// preservation, ...).
struct CheckReport {
  std::string subject;
  Verdict verdict = Verdict::Holds;
  std::vector<LawViolation> violations;

  bool holds() const { return verdict == Verdict::Holds; }
};

/// Per-axiom verdicts for one axiom-system profile; the overall verdict is
/// the conjunction.
struct AxiomResult {
  std::string axiom;
  Verdict verdict = Verdict::Holds;
  std::optional<Assignment> witness;
  uint64_t checked = 0;
  uint64_t skipped = 0;
};

struct ProfileReport {
  std::string profile;
  std::string subject;
  std::vector<AxiomResult> axioms;

  Verdict overall() const {
    Verdict v = Verdict::Holds;
    for (const auto& ax : axioms) {
      if (ax.verdict == Verdict::Fails) return Verdict::Fails;
      if (ax.verdict == Verdict::Inconclusive) v = Verdict::Inconclusive;
    }
    return v;
  }

  const AxiomResult* find(const std::string& axiom) const {
    for (const auto& ax : axioms)
      if (ax.axiom == axiom) return &ax;
    return nullptr;
  }
};

}  // namespace almonoid

#endif  // ALMONOID_REPORT_HPP_
