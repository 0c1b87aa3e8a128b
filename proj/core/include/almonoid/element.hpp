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

#ifndef ALMONOID_ELEMENT_HPP_
#define ALMONOID_ELEMENT_HPP_

#include <cstdint>
#include <string>

namespace almonoid {

/// One element of a model. Finite algebras use `Idx` (a carrier index);
/// windowed models use `Int` plus the adjoined symbols `U` and `V`.
struct Elem {
  enum class Tag : uint8_t { Idx, Int, U, V };

  Tag tag = Tag::Idx;
  int32_t val = 0;  // carrier index or integer payload; unused for U/V

  static Elem idx(int i) { return Elem{Tag::Idx, i}; }
  static Elem num(int k) { return Elem{Tag::Int, k}; }
  static Elem u() { return Elem{Tag::U, 0}; }
  static Elem v() { return Elem{Tag::V, 0}; }

  friend bool operator==(const Elem&, const Elem&) = default;
};

/// Deterministic iteration rank: integers/indices by value, adjoined
/// symbols last (U before V).
inline bool elem_rank_less(const Elem& a, const Elem& b) {
  auto group = [](const Elem& e) {
    switch (e.tag) {
      case Elem::Tag::U: return 1;
      case Elem::Tag::V: return 2;
      default: return 0;
    }
  };
  if (group(a) != group(b)) return group(a) < group(b);
  return a.val < b.val;
}

inline std::string to_string(const Elem& e) {
  switch (e.tag) {
    case Elem::Tag::U: return "u";
    case Elem::Tag::V: return "v";
    default: return std::to_string(e.val);
  }
}

/// Outcome of evaluating one operation or term.
enum class EvalStatus : uint8_t {
  Ok,
  OutOfWindow,  // exact result left the window of a windowed model
  NoUnity,      // the term uses `1` but the model has no detected unity
};

struct Eval {
  EvalStatus status = EvalStatus::Ok;
  Elem value;

  static Eval ok(Elem e) { return Eval{EvalStatus::Ok, e}; }
  static Eval out_of_window() { return Eval{EvalStatus::OutOfWindow, Elem{}}; }
  static Eval no_unity() { return Eval{EvalStatus::NoUnity, Elem{}}; }

  bool is_ok() const { return status == EvalStatus::Ok; }
};

/// The four binary operation symbols of the signature.
enum class OpSym : uint8_t { Plus, Join, Meet, Star };

inline const char* op_name(OpSym op) {
  switch (op) {
    case OpSym::Plus: return "+";
    case OpSym::Join: return "|";
    case OpSym::Meet: return "^";
    case OpSym::Star: return "*";
  }
  return "?";
}

}  // namespace almonoid

#endif  // ALMONOID_ELEMENT_HPP_
