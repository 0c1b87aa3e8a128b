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

#ifndef ALMONOID_CONSTRUCTIONS_HPP_
#define ALMONOID_CONSTRUCTIONS_HPP_

#include <vector>

#include "almonoid/congruence.hpp"
#include "almonoid/finite_algebra.hpp"
#include "almonoid/report.hpp"

namespace almonoid {

/// A map between finite models; preservation of +, |, ^, *, 0 is checked by
/// check_homomorphism, not assumed.
struct Homomorphism {
  const FiniteAlgebra* source = nullptr;
  const FiniteAlgebra* target = nullptr;
  std::vector<int> map;  // source index -> target index
};

CheckReport check_homomorphism(const Homomorphism& h);

/// Direct product with componentwise tables. The pair (i, j) maps to index
/// i*|B| + j (row-major). Throws SizeLimitError past `size_cap`.
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b,
                      int size_cap = 64);

struct SubalgebraResult {
  FiniteAlgebra algebra;
  std::vector<int> embedding;  // subalgebra index -> parent index
};

/// Closes seed ∪ {0} under all four operations; carrier kept in ascending
/// parent-index order.
SubalgebraResult subalgebra(const FiniteAlgebra& a,
                            const std::vector<int>& seed);

struct QuotientResult {
  FiniteAlgebra algebra;
  std::vector<int> class_map;        // parent index -> class id; the
                                     // canonical epimorphism
  std::vector<int> representatives;  // class id -> least member index

  Homomorphism projection(const FiniteAlgebra& parent) const {
    return Homomorphism{&parent, &algebra, class_map};
  }
};

/// Quotient by a congruence; classes are represented by their least element
/// index. Throws IncompatiblePartitionError when theta is not a congruence.
QuotientResult congruence_quotient(const FiniteAlgebra& a,
                                   const Congruence& theta);

/// Defines a-b as the least x with x+b >= a and star(a,b) = (a-b) v (b-a).
/// Any existing star table on the input is ignored. Throws NotDRlError with
/// the first failing pair when some residual does not exist.
FiniteAlgebra drl_to_al(const FiniteAlgebra& a);

}  // namespace almonoid

#endif  // ALMONOID_CONSTRUCTIONS_HPP_
