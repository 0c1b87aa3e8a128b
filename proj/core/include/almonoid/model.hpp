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

#ifndef ALMONOID_MODEL_HPP_
#define ALMONOID_MODEL_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "almonoid/element.hpp"
#include "almonoid/finite_algebra.hpp"
#include "almonoid/windowed_algebra.hpp"

namespace almonoid {

/// Uniform facade over finite and windowed models for the claim engine and
/// profile checkers. Immutable after construction; all operations are
/// read-only and safe to call concurrently.
class Model {
 public:
  explicit Model(FiniteAlgebra fa);
  explicit Model(WindowedAlgebra wa);

  const std::string& name() const { return name_; }
  bool is_finite() const;
  const FiniteAlgebra* finite() const;
  const WindowedAlgebra* windowed() const;

  /// Domain in deterministic order: indices/integers ascending, adjoined
  /// symbols last.
  const std::vector<Elem>& domain() const { return domain_; }

  Elem zero() const;

  /// The detected unity (the u with a+(a*u) = u+u for every a), if any.
  /// Detection requires the defining equation to verify with no skipped
  /// evaluation; the lowest-ranked candidate wins.
  const std::optional<Elem>& unity() const { return unity_; }
  bool ambiguous_unity() const { return ambiguous_unity_; }

  Eval plus(Elem a, Elem b) const { return apply(OpSym::Plus, a, b); }
  Eval join(Elem a, Elem b) const { return apply(OpSym::Join, a, b); }
  Eval meet(Elem a, Elem b) const { return apply(OpSym::Meet, a, b); }
  Eval star(Elem a, Elem b) const { return apply(OpSym::Star, a, b); }
  Eval apply(OpSym op, Elem a, Elem b) const;

  /// a <= b iff meet(a,b) = a. Total for every built-in model kind.
  bool leq(Elem a, Elem b) const;

 private:
  void detect_unity();

  std::variant<FiniteAlgebra, WindowedAlgebra> impl_;
  std::string name_;
  std::vector<Elem> domain_;
  std::optional<Elem> unity_;
  bool ambiguous_unity_ = false;
};

}  // namespace almonoid

#endif  // ALMONOID_MODEL_HPP_
