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

#ifndef ALMONOID_FINITE_ALGEBRA_HPP_
#define ALMONOID_FINITE_ALGEBRA_HPP_

#include <string>
#include <vector>

#include "almonoid/report.hpp"

namespace almonoid {

/// A finite model given by total operation tables over an indexed carrier.
/// Indices are canonical; the order is always derived from the meet table,
/// never stored.
struct FiniteAlgebra {
  std::string name;
  int n = 0;
  int zero = 0;
  // Row-major n*n tables, row = left operand.
  std::vector<int> plus;
  std::vector<int> join;
  std::vector<int> meet;
  std::vector<int> star;

  FiniteAlgebra() = default;
  FiniteAlgebra(std::string name_, int n_, int zero_)
      : name(std::move(name_)),
        n(n_),
        zero(zero_),
        plus(n_ * n_, 0),
        join(n_ * n_, 0),
        meet(n_ * n_, 0),
        star(n_ * n_, 0) {}

  int plus_at(int a, int b) const { return plus[a * n + b]; }
  int join_at(int a, int b) const { return join[a * n + b]; }
  int meet_at(int a, int b) const { return meet[a * n + b]; }
  int star_at(int a, int b) const { return star[a * n + b]; }

  void set_plus(int a, int b, int v) { plus[a * n + b] = v; }
  void set_join(int a, int b, int v) { join[a * n + b] = v; }
  void set_meet(int a, int b, int v) { meet[a * n + b] = v; }
  void set_star(int a, int b, int v) { star[a * n + b] = v; }

  /// x <= y iff meet(x, y) = x.
  bool leq(int a, int b) const { return meet_at(a, b) == a; }

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.n == b.n && a.zero == b.zero && a.plus == b.plus &&
           a.join == b.join && a.meet == b.meet && a.star == b.star;
  }
};

/// Checks the lattice-monoid invariants of the table set: lattice laws for
/// join/meet, commutative monoid laws for plus, and translation
/// compatibility (x <= y implies a+x <= a+y). On failure the report carries
/// the violated law name and a witness tuple.
///
/// Throws MalformedTableError when an entry is out of range.
CheckReport validate_algebra(const FiniteAlgebra& a);

}  // namespace almonoid

#endif  // ALMONOID_FINITE_ALGEBRA_HPP_
