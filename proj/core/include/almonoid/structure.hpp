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

#ifndef ALMONOID_STRUCTURE_HPP_
#define ALMONOID_STRUCTURE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "almonoid/finite_algebra.hpp"
#include "almonoid/model.hpp"
#include "almonoid/profiles.hpp"
#include "almonoid/report.hpp"

namespace almonoid {

struct StructureItem {
  std::string name;
  Verdict verdict = Verdict::Holds;
  std::vector<Elem> witness;  // empty when holds
  std::string note;
};

/// Extracted subset plus per-theorem-item verdicts. Derived data (inverse
/// map, complement map, unity) is verified by direct evaluation, never
/// assumed.
struct StructureReport {
  std::string analysis;
  std::string subject;
  std::vector<Elem> elements;
  std::vector<std::pair<Elem, Elem>> pairs;  // (a, inverse) / (a, complement)
  std::optional<Elem> distinguished;         // unity when applicable
  std::vector<StructureItem> items;

  Verdict overall() const {
    Verdict v = Verdict::Holds;
    for (const auto& it : items) {
      if (it.verdict == Verdict::Fails) return Verdict::Fails;
      if (it.verdict == Verdict::Inconclusive) v = Verdict::Inconclusive;
    }
    return v;
  }
  const StructureItem* find(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }
};

/// All invertible elements with their inverses; checks closure under +, |,
/// ^, the inverse formula y = 0*x, and the invertibility theorem items.
StructureReport invertibles(const FiniteAlgebra& a);

/// For invertible pairs, verifies a*b = (a-b) | (b-a),
/// a*(a^b) = (a-b) | 0 and the cancellation law. Vacuous (and reported as
/// such) when only 0 is invertible. Windowed models treat every integer as
/// invertible and skip out-of-window evaluations.
StructureReport invertible_formulas_check(const Model& m);

/// Idempotents (a+a = a) and the idempotent-theorem items on all pairs.
StructureReport idempotents(const Model& m);

/// The element u with a+(a*u) = u+u for every a, if any. Flags ambiguity
/// (lowest rank returned) and verifies u+u = u and a <= u on the positive
/// cone.
StructureReport find_unity(const Model& m);

/// Complemented elements with complements; verifies uniqueness, a' = a*1,
/// idempotence and the Boolean-algebra laws on the complemented set.
/// Throws NoUnityError when the model has no unity.
StructureReport complemented(const FiniteAlgebra& a);

struct IsometryResult {
  bool is_isometry = false;
  std::optional<std::pair<Elem, Elem>> witness;
};

/// Bijectivity plus star-distance preservation.
IsometryResult is_isometry(const FiniteAlgebra& a, const std::vector<int>& map);

/// For every a, tests whether x -> a+x is an isometry and compares against
/// invertibility of a; reports every a where the biconditional fails.
StructureReport translation_isometry_scan(const FiniteAlgebra& a);

/// Tests whether every x -> a*x is an isometry; when the premise holds,
/// verifies that the whole algebra is Boolean (all elements complemented).
StructureReport star_translation_scan(const FiniteAlgebra& a);

struct PositiveConeResult {
  std::optional<FiniteAlgebra> cone;
  std::vector<int> embedding;  // cone index -> parent index
  StructureReport report;
  std::optional<ProfileReport> drl;
};

/// Restricts to {a : a >= 0}, verifies closure, runs check_drl on the cone
/// and verifies a-b = a*(a^b) there.
PositiveConeResult positive_cone(const FiniteAlgebra& a);

}  // namespace almonoid

#endif  // ALMONOID_STRUCTURE_HPP_
