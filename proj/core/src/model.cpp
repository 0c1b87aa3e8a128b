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

#include "almonoid/model.hpp"

#include <stdexcept>

namespace almonoid {

Model::Model(FiniteAlgebra fa) : impl_(std::move(fa)) {
  const auto& a = std::get<FiniteAlgebra>(impl_);
  name_ = a.name;
  domain_.reserve(a.n);
  for (int i = 0; i < a.n; ++i) domain_.push_back(Elem::idx(i));
  detect_unity();
}

Model::Model(WindowedAlgebra wa) : impl_(std::move(wa)) {
  const auto& w = std::get<WindowedAlgebra>(impl_);
  name_ = w.uri();
  domain_ = w.domain();
  detect_unity();
}

bool Model::is_finite() const {
  return std::holds_alternative<FiniteAlgebra>(impl_);
}

const FiniteAlgebra* Model::finite() const {
  return std::get_if<FiniteAlgebra>(&impl_);
}

const WindowedAlgebra* Model::windowed() const {
  return std::get_if<WindowedAlgebra>(&impl_);
}

Elem Model::zero() const {
  if (const auto* a = finite()) return Elem::idx(a->zero);
  return windowed()->zero();
}

Eval Model::apply(OpSym op, Elem a, Elem b) const {
  if (const auto* fa = finite()) {
    const int x = a.val, y = b.val;
    switch (op) {
      case OpSym::Plus: return Eval::ok(Elem::idx(fa->plus_at(x, y)));
      case OpSym::Join: return Eval::ok(Elem::idx(fa->join_at(x, y)));
      case OpSym::Meet: return Eval::ok(Elem::idx(fa->meet_at(x, y)));
      case OpSym::Star: return Eval::ok(Elem::idx(fa->star_at(x, y)));
    }
  }
  const auto* wa = windowed();
  switch (op) {
    case OpSym::Plus: return wa->plus(a, b);
    case OpSym::Join: return wa->join(a, b);
    case OpSym::Meet: return wa->meet(a, b);
    case OpSym::Star: return wa->star(a, b);
  }
  throw std::logic_error("unreachable");
}

bool Model::leq(Elem a, Elem b) const {
  if (const auto* fa = finite()) return fa->leq(a.val, b.val);
  return windowed()->leq(a, b);
}

void Model::detect_unity() {
  // A candidate counts only when a+(a*e) = e+e verifies for every domain
  // element with no out-of-window evaluation.
  std::vector<Elem> candidates;
  for (const Elem& e : domain_) {
    bool all_ok = true;
    for (const Elem& a : domain_) {
      const Eval d = star(a, e);
      if (!d.is_ok()) {
        all_ok = false;
        break;
      }
      const Eval lhs = plus(a, d.value);
      const Eval rhs = plus(e, e);
      if (!lhs.is_ok() || !rhs.is_ok() || !(lhs.value == rhs.value)) {
        all_ok = false;
        break;
      }
    }
    if (all_ok) candidates.push_back(e);
  }
  if (!candidates.empty()) unity_ = candidates.front();
  ambiguous_unity_ = candidates.size() > 1;
}

}  // namespace almonoid
