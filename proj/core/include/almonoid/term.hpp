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

#ifndef ALMONOID_TERM_HPP_
#define ALMONOID_TERM_HPP_

#include <memory>
#include <string>
#include <vector>

#include "almonoid/element.hpp"

namespace almonoid {

/// Abstract syntax for terms over {+, |, ^, d, 0, 1}. Variables carry the
/// index of their binder in the owning claim's forall list.
struct Term {
  enum class Kind : uint8_t { Var, Zero, One, Op };

  Kind kind = Kind::Zero;
  OpSym op = OpSym::Plus;  // valid when kind == Op
  int var = -1;            // valid when kind == Var
  std::string var_name;
  std::vector<Term> args;  // two entries when kind == Op

  static Term variable(int index, std::string name) {
    Term t;
    t.kind = Kind::Var;
    t.var = index;
    t.var_name = std::move(name);
    return t;
  }
  static Term zero() {
    Term t;
    t.kind = Kind::Zero;
    return t;
  }
  static Term one() {
    Term t;
    t.kind = Kind::One;
    return t;
  }
  static Term make(OpSym op, Term lhs, Term rhs) {
    Term t;
    t.kind = Kind::Op;
    t.op = op;
    t.args.push_back(std::move(lhs));
    t.args.push_back(std::move(rhs));
    return t;
  }

  bool uses_one() const {
    if (kind == Kind::One) return true;
    for (const auto& a : args)
      if (a.uses_one()) return true;
    return false;
  }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Var: return a.var == b.var && a.var_name == b.var_name;
      case Kind::Zero:
      case Kind::One: return true;
      case Kind::Op: return a.op == b.op && a.args == b.args;
    }
    return false;
  }
};

/// Fully parenthesized DSL rendering; reparses to an equal term.
std::string print_term(const Term& t);

}  // namespace almonoid

#endif  // ALMONOID_TERM_HPP_
