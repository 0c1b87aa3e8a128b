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

#ifndef ALMONOID_PROFILES_HPP_
#define ALMONOID_PROFILES_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "almonoid/checker.hpp"
#include "almonoid/finite_algebra.hpp"
#include "almonoid/model.hpp"
#include "almonoid/report.hpp"

namespace almonoid {

enum class Profile : uint8_t {
  Autometrized,
  LatticeOrdered,
  Representable,
  SemilatticeOrdered,
  Drl,
  AlMonoid,
  AlMonoidEq,
};

std::string_view profile_name(Profile p);
std::optional<Profile> profile_from_name(std::string_view name);
std::vector<Profile> all_profiles();

struct ProfileOptions {
  CheckOptions check;
  // With fast_mode the checker stops at the first failing axiom instead of
  // reporting the full breakdown.
  bool fast_mode = false;
};

ProfileReport check_profile(const Model& m, Profile p,
                            const ProfileOptions& opts = {});

ProfileReport check_autometrized(const Model& m, const ProfileOptions& = {});
ProfileReport check_lattice_ordered(const Model& m, const ProfileOptions& = {});
ProfileReport check_representable(const Model& m, const ProfileOptions& = {});
ProfileReport check_semilattice_ordered(const Model& m,
                                        const ProfileOptions& = {});
ProfileReport check_drl(const Model& m, const ProfileOptions& = {});
ProfileReport check_al_monoid(const Model& m, const ProfileOptions& = {});
ProfileReport check_al_monoid_equational(const Model& m,
                                         const ProfileOptions& = {});

/// Residuals of a finite model: minus[a][b] is the least x with x+b >= a.
/// Returns the table when every pair has a least element, otherwise the
/// first failing pair in scan order.
struct DrlResiduals {
  bool ok = false;
  std::vector<int> minus;  // row-major
  int fail_a = -1;
  int fail_b = -1;
};
DrlResiduals compute_residuals(const FiniteAlgebra& a);

}  // namespace almonoid

#endif  // ALMONOID_PROFILES_HPP_
