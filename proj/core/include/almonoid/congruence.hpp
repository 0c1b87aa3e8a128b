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

#ifndef ALMONOID_CONGRUENCE_HPP_
#define ALMONOID_CONGRUENCE_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "almonoid/checker.hpp"
#include "almonoid/model.hpp"
#include "almonoid/report.hpp"

namespace almonoid {

/// A partition of a finite carrier as a class-id array, class ids
/// normalized to first-occurrence order.
struct Congruence {
  std::vector<int> class_of;

  static Congruence identity(int n);
  static Congruence full(int n);
  static Congruence from_classes(int n,
                                 const std::vector<std::vector<int>>& classes);

  int size() const { return static_cast<int>(class_of.size()); }
  int num_classes() const;
  bool same(int a, int b) const { return class_of[a] == class_of[b]; }
  std::vector<std::vector<int>> classes() const;
  std::string to_text() const;  // e.g. [[0,1],[2]]

  void normalize();

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// Compatibility witness: a ~ b and c ~ d but op(a,c) !~ op(b,d).
struct CompatibilityWitness {
  OpSym op = OpSym::Plus;
  int a = 0, b = 0, c = 0, d = 0;
};

/// Nullopt when the partition is a congruence, else the first witness in
/// scan order.
std::optional<CompatibilityWitness> congruence_violation(
    const FiniteAlgebra& alg, const Congruence& part);

bool is_congruence(const FiniteAlgebra& alg, const Congruence& part);

/// The complete congruence lattice, finest first (identity), coarsest last
/// (full). Throws SizeLimitError when the carrier exceeds `bound`.
std::vector<Congruence> all_congruences(const FiniteAlgebra& alg,
                                        int bound = 8);

/// Smallest congruence identifying a and b, computed by closing under
/// operation translations and transitivity until fixpoint.
Congruence principal_congruence(const FiniteAlgebra& alg, int a, int b);

Congruence congruence_meet(const Congruence& x, const Congruence& y);
Congruence congruence_join(const FiniteAlgebra& alg, const Congruence& x,
                           const Congruence& y);

struct PermutabilityWitness {
  int theta = 0, phi = 0;  // indices into the congruence list
  int a = 0, c = 0;        // pair in one composite only
};

struct ConReport {
  bool holds = true;
  std::optional<PermutabilityWitness> perm_witness;
  std::optional<std::array<int, 3>> dist_witness;  // failing triple
  int lattice_size = 0;
};

/// theta o phi means: a theta b phi c.
ConReport check_con_permutable(const FiniteAlgebra& alg, int bound = 8);
ConReport check_con_distributive(const FiniteAlgebra& alg, int bound = 8);

/// Evaluates the three identities m(x,y,y)=x, m(y,y,x)=x, m(x,y,x)=x for
/// m(x,y,z) = ((x*y)*z) ^ ((z*y)*x) ^ (x|z), reported separately.
std::array<ClaimReport, 3> pixley_check(const Model& m,
                                        const CheckOptions& opts = {});

}  // namespace almonoid

#endif  // ALMONOID_CONGRUENCE_HPP_
