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

#include "almonoid/finite_algebra.hpp"

#include <string>

#include "almonoid/errors.hpp"

namespace almonoid {

namespace {

void add_violation(CheckReport& rep, const std::string& law,
                   std::initializer_list<int> tuple) {
  LawViolation v;
  v.law = law;
  for (int e : tuple) v.witness.push_back(Elem::idx(e));
  rep.violations.push_back(std::move(v));
  rep.verdict = Verdict::Fails;
}

// One witness per law keeps reports stable as regression fixtures.
bool has_law(const CheckReport& rep, const std::string& law) {
  for (const auto& v : rep.violations)
    if (v.law == law) return true;
  return false;
}

}  // namespace

CheckReport validate_algebra(const FiniteAlgebra& a) {
  CheckReport rep;
  rep.subject = a.name;

  const int n = a.n;
  if (n <= 0) throw MalformedTableError("empty carrier");
  if (a.zero < 0 || a.zero >= n)
    throw MalformedTableError("zero index out of range");
  for (const auto* t : {&a.plus, &a.join, &a.meet, &a.star}) {
    if (static_cast<int>(t->size()) != n * n)
      throw MalformedTableError("table has wrong shape");
    for (int v : *t)
      if (v < 0 || v >= n) throw MalformedTableError("table entry out of range");
  }

  auto scan_pair_law = [&](const char* law, auto&& pred) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!pred(x, y)) {
          add_violation(rep, law, {x, y});
          return;
        }
  };
  auto scan_triple_law = [&](const char* law, auto&& pred) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!pred(x, y, z)) {
            add_violation(rep, law, {x, y, z});
            return;
          }
  };

  // Lattice reduct.
  scan_pair_law("join-commutative",
                [&](int x, int y) { return a.join_at(x, y) == a.join_at(y, x); });
  scan_pair_law("meet-commutative",
                [&](int x, int y) { return a.meet_at(x, y) == a.meet_at(y, x); });
  for (int x = 0; x < n && !has_law(rep, "join-idempotent"); ++x)
    if (a.join_at(x, x) != x) add_violation(rep, "join-idempotent", {x});
  for (int x = 0; x < n && !has_law(rep, "meet-idempotent"); ++x)
    if (a.meet_at(x, x) != x) add_violation(rep, "meet-idempotent", {x});
  scan_triple_law("join-associative", [&](int x, int y, int z) {
    return a.join_at(a.join_at(x, y), z) == a.join_at(x, a.join_at(y, z));
  });
  scan_triple_law("meet-associative", [&](int x, int y, int z) {
    return a.meet_at(a.meet_at(x, y), z) == a.meet_at(x, a.meet_at(y, z));
  });
  scan_pair_law("absorption-join-meet",
                [&](int x, int y) { return a.join_at(x, a.meet_at(x, y)) == x; });
  scan_pair_law("absorption-meet-join",
                [&](int x, int y) { return a.meet_at(x, a.join_at(x, y)) == x; });

  // Commutative monoid.
  scan_pair_law("plus-commutative",
                [&](int x, int y) { return a.plus_at(x, y) == a.plus_at(y, x); });
  scan_triple_law("plus-associative", [&](int x, int y, int z) {
    return a.plus_at(a.plus_at(x, y), z) == a.plus_at(x, a.plus_at(y, z));
  });
  for (int x = 0; x < n && !has_law(rep, "plus-identity"); ++x)
    if (a.plus_at(x, a.zero) != x) add_violation(rep, "plus-identity", {x});

  // Translation compatibility: x <= y implies t+x <= t+y.
  for (int t = 0; t < n && !has_law(rep, "translation-compatible"); ++t)
    for (int x = 0; x < n && !has_law(rep, "translation-compatible"); ++x)
      for (int y = 0; y < n; ++y) {
        if (!a.leq(x, y)) continue;
        if (!a.leq(a.plus_at(t, x), a.plus_at(t, y))) {
          add_violation(rep, "translation-compatible", {t, x, y});
          break;
        }
      }

  return rep;
}

}  // namespace almonoid
