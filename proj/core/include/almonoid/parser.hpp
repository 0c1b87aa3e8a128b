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

#ifndef ALMONOID_PARSER_HPP_
#define ALMONOID_PARSER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "almonoid/claim.hpp"

namespace almonoid {

// Claims DSL:
//   claim := "claim" IDENT ":" "forall" IDENT+ ":" [hyps "==>"] rel
//   hyps  := rel ("&" rel)*
//   rel   := term ("=" | "<=") term
//   term  := atom | atom (OP atom)+        -- one operator per chain
//   atom  := IDENT | "0" | "1" | "(" term ")"
//   OP    := "+" | "|" | "^" | "d"
//
// Chains of a single operator associate left; mixing operators without
// parentheses is a syntax error. `#` starts a comment. The identifier `d`
// is the star operator and cannot be used as a variable.

/// Parses exactly one claim. Throws SyntaxError / UnboundVariableError.
Claim parse_claim(std::string_view text);

/// Parses a claim file: any number of claims separated by whitespace.
std::vector<Claim> parse_claims(std::string_view text);

}  // namespace almonoid

#endif  // ALMONOID_PARSER_HPP_
