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

#ifndef ALMONOID_WINDOWED_ALGEBRA_HPP_
#define ALMONOID_WINDOWED_ALGEBRA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "almonoid/element.hpp"

namespace almonoid {

enum class WindowKind : uint8_t {
  PlainInt,          // the integers with a+b, max, min, |a-b|
  IntWithTop,        // integers with one adjoined top u
  IntWithTopBottom,  // integers with bottom u and top v
};

/// An infinite Z-based model evaluated on the window [-B, B]. Operations
/// are exact: a result whose integer value leaves the window is reported
/// as OutOfWindow, never clamped.
///
/// IntWithTop follows a+u = u = u+a, u+u = u, a*b = |a-b|, a*u = u = u*a,
/// u*u = 0; u is the top of the order.
///
/// IntWithTopBottom has u < a < v for every integer a, with
/// a+u = u, a+v = v, u+v = u, u+u = u, v+v = v and the metric reading
/// a*u = a*v = v for integers, u*v = v, u*u = v*v = 0.
struct WindowedAlgebra {
  WindowKind kind = WindowKind::PlainInt;
  int bound = 1;

  WindowedAlgebra() = default;
  WindowedAlgebra(WindowKind k, int b) : kind(k), bound(b) {}

  bool in_window(int k) const { return k >= -bound && k <= bound; }
  bool has_u() const { return kind != WindowKind::PlainInt; }
  bool has_v() const { return kind == WindowKind::IntWithTopBottom; }

  /// Window elements in deterministic order: integers ascending, then the
  /// adjoined symbols.
  std::vector<Elem> domain() const;

  Elem zero() const { return Elem::num(0); }

  Eval plus(Elem a, Elem b) const;
  Eval join(Elem a, Elem b) const;
  Eval meet(Elem a, Elem b) const;
  Eval star(Elem a, Elem b) const;

  /// The order is total for all three kinds; never leaves the window.
  bool leq(Elem a, Elem b) const;

  std::string uri() const;
};

WindowedAlgebra make_int_window(int bound);
WindowedAlgebra make_int_with_top(int bound);
WindowedAlgebra make_int_with_top_bottom(int bound);

}  // namespace almonoid

#endif  // ALMONOID_WINDOWED_ALGEBRA_HPP_
