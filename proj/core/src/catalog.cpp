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

#include "almonoid/catalog.hpp"

#include "almonoid/parser.hpp"

namespace almonoid {

namespace {

// The workbench's claim inventory. The order is fixed; reports double as
// regression fixtures.
constexpr std::string_view kCatalogSource = R"(
# Defining identities
claim AX2 : forall a b : ((a d (a ^ b)) + b) = (a | b)
claim AX4 : forall a b : ((a d (a | b)) ^ (b d (a | b))) = 0
claim CONTR_plus : forall a x y : ((a + x) d (a + y)) <= (x d y)
claim CONTR_join : forall a x y : ((a | x) d (a | y)) <= (x d y)
claim CONTR_meet : forall a x y : ((a ^ x) d (a ^ y)) <= (x d y)
claim CONTR_star : forall a x y : ((a d x) d (a d y)) <= (x d y)

# Equational replacements for the distance identity
claim T1_1 : forall x y : y <= (x + (y d x))
claim T1_2 : forall x y z : (x d y) <= ((x | z) d y)
claim T1_3 : forall x y : ((x + y) d y) <= x

# Monotonicity of the metric in the first argument
claim l1 : forall a b c : a <= b ==> (a d c) <= (b d c)

# Metric consequences
claim L2_1 : forall a b : (a d (a ^ b)) = ((a | b) d b)
claim L2_2 : forall a : 0 <= a ==> (a d 0) = a
claim L2_3 : forall a b : 0 <= (a d b)
claim L2_4 : forall a : (a d a) = 0
claim L2_5 : forall a b : (a d b) = (b d a)
claim L2_6 : forall a b : (a d b) = 0 ==> a = b
claim L2_7 : forall a b c : (a d c) <= ((a d b) + (b d c))

# Decompositions of join, meet and the metric
claim T23_1 : forall a b : b <= a ==> a = ((a d b) + b)
claim T23_2 : forall a b : (a | b) = ((a d b) + (a ^ b))
claim T23_3 : forall a b : (a d b) = ((a | b) d (a ^ b))
claim T23_4 : forall a b : (a d b) = ((a d (a ^ b)) + ((a ^ b) d b))
claim T23_4j : forall a b : (a d b) = ((a d (a | b)) + ((a | b) d b))

# Inverses through the metric
claim L2_8 : forall x y : (y + x) = 0 ==> y = (0 d x)

# Distribution of the metric over join / meet
claim l6 : forall a b c : ((a | b) d c) = ((a d c) | (b d c))
claim L9 : forall a b c : (a d (b ^ c)) <= ((a d b) | (a d c))

# Factorization identities
claim STARFACT : forall a b : ((a d (a ^ b)) d (b d (a ^ b))) = (a d b)
claim SYMDIFF : forall a b : ((a | b) d (a ^ b)) = ((a d b) | (b d a))
claim l10 : forall a b c : (a d (b + c)) = ((a d c) d b)

# Unity and complements
claim UNITY : forall a : (a + (a d 1)) = (1 + 1)
claim CPL2 : forall a : (a ^ (a d 1)) = 0
claim CPL3 : forall a : (a + (a d 1)) = 1

# Pixley-term identities, m(x,y,z) = ((x d y) d z) ^ ((z d y) d x) ^ (x | z)
claim Tl_m1 : forall x y : ((((x d y) d y) ^ ((y d y) d x)) ^ (x | y)) = x
claim Tl_m2 : forall x y : ((((y d y) d x) ^ ((x d y) d y)) ^ (y | x)) = x
claim Tl_m3 : forall x y : ((((x d y) d x) ^ ((x d y) d x)) ^ (x | x)) = x
)";

// Monoid, lattice, order and metric laws used by the profile checkers.
constexpr std::string_view kLawSource = R"(
claim plus_comm : forall a b : (a + b) = (b + a)
claim plus_assoc : forall a b c : ((a + b) + c) = (a + (b + c))
claim plus_identity : forall a : (a + 0) = a
claim join_comm : forall a b : (a | b) = (b | a)
claim join_assoc : forall a b c : ((a | b) | c) = (a | (b | c))
claim join_idem : forall a : (a | a) = a
claim meet_comm : forall a b : (a ^ b) = (b ^ a)
claim meet_assoc : forall a b c : ((a ^ b) ^ c) = (a ^ (b ^ c))
claim meet_idem : forall a : (a ^ a) = a
claim absorb_jm : forall a b : (a | (a ^ b)) = a
claim absorb_mj : forall a b : (a ^ (a | b)) = a
claim translation : forall a x y : x <= y ==> (a + x) <= (a + y)
claim ord_refl : forall a : a <= a
claim ord_antisym : forall a b : a <= b & b <= a ==> a = b
claim metric_pos : forall a b : 0 <= (a d b)
claim metric_zero : forall a : (a d a) = 0
claim metric_ioi : forall a b : (a d b) = 0 ==> a = b
claim metric_sym : forall a b : (a d b) = (b d a)
claim metric_tri : forall a b c : (a d b) <= ((a d c) + (c d b))
claim semiregular : forall a : 0 <= a ==> (a d 0) = a
claim plus_meet_dist : forall a b c : (a + (b ^ c)) = ((a + b) ^ (a + c))
)";

}  // namespace

const std::vector<Claim>& catalog() {
  static const std::vector<Claim> claims = parse_claims(kCatalogSource);
  return claims;
}

const std::vector<Claim>& law_claims() {
  static const std::vector<Claim> claims = parse_claims(kLawSource);
  return claims;
}

const Claim* catalog_claim(std::string_view id) {
  for (const auto& c : catalog())
    if (c.id == id) return &c;
  return nullptr;
}

const Claim* law_claim(std::string_view id) {
  for (const auto& c : law_claims())
    if (c.id == id) return &c;
  return nullptr;
}

const Claim* find_claim(std::string_view id) {
  if (const Claim* c = catalog_claim(id)) return c;
  return law_claim(id);
}

std::string_view catalog_source() { return kCatalogSource; }

}  // namespace almonoid
