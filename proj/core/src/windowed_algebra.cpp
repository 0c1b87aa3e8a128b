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

#include "almonoid/windowed_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace almonoid {

namespace {

bool is_u(Elem e) { return e.tag == Elem::Tag::U; }
bool is_v(Elem e) { return e.tag == Elem::Tag::V; }
bool is_int(Elem e) { return e.tag == Elem::Tag::Int; }

}  // namespace

std::vector<Elem> WindowedAlgebra::domain() const {
  std::vector<Elem> d;
  d.reserve(2 * bound + 3);
  for (int k = -bound; k <= bound; ++k) d.push_back(Elem::num(k));
  if (has_u()) d.push_back(Elem::u());
  if (has_v()) d.push_back(Elem::v());
  return d;
}

Eval WindowedAlgebra::plus(Elem a, Elem b) const {
  if (is_int(a) && is_int(b)) {
    const int r = a.val + b.val;
    return in_window(r) ? Eval::ok(Elem::num(r)) : Eval::out_of_window();
  }
  switch (kind) {
    case WindowKind::IntWithTop:
      // a+u = u = u+a, u+u = u.
      return Eval::ok(Elem::u());
    case WindowKind::IntWithTopBottom:
      // a+u = u, a+v = v, u+v = u, u+u = u, v+v = v.
      if (is_u(a) || is_u(b)) return Eval::ok(Elem::u());
      return Eval::ok(Elem::v());
    default:
      throw std::logic_error("adjoined element in PlainInt model");
  }
}

bool WindowedAlgebra::leq(Elem a, Elem b) const {
  // All three kinds are chains.
  switch (kind) {
    case WindowKind::PlainInt:
      return a.val <= b.val;
    case WindowKind::IntWithTop:
      if (is_u(b)) return true;
      if (is_u(a)) return is_u(b);
      return a.val <= b.val;
    case WindowKind::IntWithTopBottom:
      if (is_u(a) || is_v(b)) return true;
      if (is_v(a)) return is_v(b);
      if (is_u(b)) return is_u(a);
      return a.val <= b.val;
  }
  return false;
}

Eval WindowedAlgebra::join(Elem a, Elem b) const {
  return Eval::ok(leq(a, b) ? b : a);
}

Eval WindowedAlgebra::meet(Elem a, Elem b) const {
  return Eval::ok(leq(a, b) ? a : b);
}

Eval WindowedAlgebra::star(Elem a, Elem b) const {
  if (is_int(a) && is_int(b)) {
    const int r = std::abs(a.val - b.val);
    return in_window(r) ? Eval::ok(Elem::num(r)) : Eval::out_of_window();
  }
  switch (kind) {
    case WindowKind::IntWithTop:
      // a*u = u = u*a, u*u = 0.
      if (is_u(a) && is_u(b)) return Eval::ok(Elem::num(0));
      return Eval::ok(Elem::u());
    case WindowKind::IntWithTopBottom:
      // a*u = a*v = v for integers, u*v = v, u*u = v*v = 0.
      if (a.tag == b.tag) return Eval::ok(Elem::num(0));
      return Eval::ok(Elem::v());
    default:
      throw std::logic_error("adjoined element in PlainInt model");
  }
}

std::string WindowedAlgebra::uri() const {
  switch (kind) {
    case WindowKind::PlainInt: return "int:" + std::to_string(bound);
    case WindowKind::IntWithTop: return "intu:" + std::to_string(bound);
    case WindowKind::IntWithTopBottom: return "intuv:" + std::to_string(bound);
  }
  return "?";
}

WindowedAlgebra make_int_window(int bound) {
  if (bound < 1) throw std::invalid_argument("window bound must be >= 1");
  return WindowedAlgebra(WindowKind::PlainInt, bound);
}

WindowedAlgebra make_int_with_top(int bound) {
  if (bound < 1) throw std::invalid_argument("window bound must be >= 1");
  return WindowedAlgebra(WindowKind::IntWithTop, bound);
}

WindowedAlgebra make_int_with_top_bottom(int bound) {
  if (bound < 1) throw std::invalid_argument("window bound must be >= 1");
  return WindowedAlgebra(WindowKind::IntWithTopBottom, bound);
}

}  // namespace almonoid
