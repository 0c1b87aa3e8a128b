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

#ifndef ALMONOID_CATALOG_HPP_
#define ALMONOID_CATALOG_HPP_

#include <string_view>
#include <vector>

#include "almonoid/claim.hpp"

namespace almonoid {

/// The built-in claim catalog in fixed order. Entries are parsed once from
/// the embedded DSL source.
const std::vector<Claim>& catalog();

/// Looks up a catalog claim by id; nullptr when absent.
const Claim* catalog_claim(std::string_view id);

/// Internal law claims used by the axiom-profile checkers (monoid, lattice,
/// order and metric laws). Shares the lookup namespace with the catalog.
const std::vector<Claim>& law_claims();
const Claim* law_claim(std::string_view id);

/// Catalog or law claim by id; nullptr when absent.
const Claim* find_claim(std::string_view id);

/// The raw DSL source of the catalog (useful for round-trip tests).
std::string_view catalog_source();

}  // namespace almonoid

#endif  // ALMONOID_CATALOG_HPP_
