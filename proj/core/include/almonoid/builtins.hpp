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

#ifndef ALMONOID_BUILTINS_HPP_
#define ALMONOID_BUILTINS_HPP_

#include <optional>
#include <string>

#include "almonoid/finite_algebra.hpp"
#include "almonoid/model.hpp"

namespace almonoid {

/// Chain 0 < 1 < ... < n-1 with truncated addition and star = |a-b|.
FiniteAlgebra make_mv_chain(int n);

/// Power set of a k-element set (indices are bitmasks): join/plus = union,
/// meet = intersection, star = symmetric difference. Requires k <= 4.
FiniteAlgebra make_boolean(int k);

/// Resolves a builtin model URI: boolean:k, mv:n, int:B, intu:B, intuv:B.
/// Returns nullopt if the string is not a builtin URI.
std::optional<Model> builtin_model(const std::string& uri);

}  // namespace almonoid

#endif  // ALMONOID_BUILTINS_HPP_
