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

#ifndef ALMONOID_IO_HPP_
#define ALMONOID_IO_HPP_

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "almonoid/congruence.hpp"
#include "almonoid/finite_algebra.hpp"
#include "almonoid/model.hpp"
#include "almonoid/report.hpp"
#include "almonoid/search.hpp"
#include "almonoid/structure.hpp"

namespace almonoid {

// Algebra text format:
//   size n
//   zero i
//   plus            (then n rows of n indices, row = left operand)
//   join / meet / star blocks likewise
// `#` starts a comment line. The star block may be the single line
// `star derived`, in which case the star table is computed from the DRl
// residuals (and loading fails with NotDRlError when they do not exist).

/// Parses the text format. Throws SyntaxError / MalformedTableError /
/// NotDRlError.
FiniteAlgebra read_algebra(std::istream& in, const std::string& name = "");
FiniteAlgebra read_algebra_file(const std::string& path);

/// Canonical (bit-exact) rendering of the text format.
std::string write_algebra(const FiniteAlgebra& a);

/// Builtin URI (boolean:k, mv:n, int:B, intu:B, intuv:B) or file path.
Model load_model(const std::string& ref);

/// Partition file: JSON class lists, e.g. [[0,1],[2]].
Congruence read_partition_file(const std::string& path, int n);

nlohmann::json to_json(const ClaimReport& r);
nlohmann::json to_json(const AxiomResult& r);
nlohmann::json to_json(const ProfileReport& r);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const StructureReport& r);
nlohmann::json to_json(const IndependenceReport& r);

std::string render_text(const ClaimReport& r);
std::string render_text(const ProfileReport& r);
std::string render_text(const CheckReport& r);
std::string render_text(const StructureReport& r);
std::string render_text(const IndependenceReport& r);

}  // namespace almonoid

#endif  // ALMONOID_IO_HPP_
