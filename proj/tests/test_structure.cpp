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

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "almonoid/builtins.hpp"
#include "almonoid/errors.hpp"
#include "almonoid/search.hpp"
#include "almonoid/structure.hpp"
#include "test_models.hpp"

using namespace almonoid;

namespace {

std::vector<Elem> idx_list(std::initializer_list<int> xs) {
  std::vector<Elem> out;
  for (int x : xs) out.push_back(Elem::idx(x));
  return out;
}

}  // namespace

TEST_SUITE("structure-analysis") {

TEST_CASE("only zero is invertible in the finite families") {
  CHECK_EQ(invertibles(make_boolean(2)).elements, idx_list({0}));
  CHECK_EQ(invertibles(make_mv_chain(3)).elements, idx_list({0}));
  CHECK_EQ(invertibles(testmodels::one_element()).elements, idx_list({0}));
  CHECK_EQ(invertibles(make_boolean(2)).overall(), Verdict::Holds);
}

TEST_CASE("invertible formulas hold on the integer window") {
  const StructureReport rep =
      invertible_formulas_check(Model(make_int_window(20)));
  CHECK_EQ(rep.elements.size(), 41);  // every in-window integer is a unit
  for (const auto& it : rep.items) CHECK_NE(it.verdict, Verdict::Fails);
}

TEST_CASE("invertible formulas are vacuous on boolean:2") {
  const StructureReport rep = invertible_formulas_check(Model(make_boolean(2)));
  CHECK_EQ(rep.elements, idx_list({0}));
  REQUIRE_NE(rep.find("vacuous"), nullptr);
  CHECK_EQ(rep.overall(), Verdict::Holds);
}

TEST_CASE("idempotents") {
  CHECK_EQ(idempotents(Model(make_boolean(2))).elements,
           idx_list({0, 1, 2, 3}));
  const StructureReport mv = idempotents(Model(make_mv_chain(3)));
  CHECK_EQ(mv.elements, idx_list({0, 2}));
  CHECK_EQ(mv.overall(), Verdict::Holds);
  const StructureReport zi = idempotents(Model(make_int_window(10)));
  CHECK_EQ(zi.elements, std::vector<Elem>{Elem::num(0)});
}

TEST_CASE("unity detection reports") {
  const StructureReport b = find_unity(Model(make_boolean(2)));
  CHECK_EQ(b.distinguished, Elem::idx(3));
  CHECK_EQ(b.overall(), Verdict::Holds);

  const StructureReport mv = find_unity(Model(make_mv_chain(3)));
  CHECK_EQ(mv.distinguished, Elem::idx(2));

  const StructureReport zi = find_unity(Model(make_int_window(20)));
  CHECK_FALSE(zi.distinguished.has_value());
}

TEST_CASE("complemented elements") {
  SUBCASE("boolean:3 is Boolean") {
    const StructureReport rep = complemented(make_boolean(3));
    CHECK_EQ(rep.elements.size(), 8);
    CHECK_EQ(rep.overall(), Verdict::Holds);
  }
  SUBCASE("the middle of mv:3 has no complement") {
    const StructureReport rep = complemented(make_mv_chain(3));
    CHECK_EQ(rep.elements, idx_list({0, 2}));
    CHECK_EQ(rep.overall(), Verdict::Holds);
  }
  SUBCASE("one-element algebra is degenerate Boolean") {
    const StructureReport rep = complemented(testmodels::one_element());
    CHECK_EQ(rep.elements, idx_list({0}));
    CHECK_EQ(rep.overall(), Verdict::Holds);
  }
  SUBCASE("no unity means no analysis") {
    FiniteAlgebra g = testmodels::join_chain(3);
    g.set_star(0, 2, 1);  // break the unity equation at a = 0
    CHECK_THROWS_AS(complemented(g), NoUnityError);
  }
}

TEST_CASE("isometry checks") {
  const FiniteAlgebra b4 = make_boolean(2);
  std::vector<int> id(4);
  std::iota(id.begin(), id.end(), 0);
  CHECK(is_isometry(b4, id).is_isometry);

  // Complementation x -> x * top is a star-translation isometry.
  std::vector<int> compl_map(4);
  for (int x = 0; x < 4; ++x) compl_map[x] = b4.star_at(x, 3);
  CHECK(is_isometry(b4, compl_map).is_isometry);

  // x -> x+1 on the truncated chain is not bijective.
  const FiniteAlgebra mv = make_mv_chain(3);
  std::vector<int> shift(3);
  for (int x = 0; x < 3; ++x) shift[x] = mv.plus_at(x, 1);
  const IsometryResult res = is_isometry(mv, shift);
  CHECK_FALSE(res.is_isometry);
  REQUIRE(res.witness.has_value());
  CHECK_EQ(res.witness->first, Elem::idx(1));
  CHECK_EQ(res.witness->second, Elem::idx(2));
}

TEST_CASE("translation isometries match invertibility") {
  for (const FiniteAlgebra& a :
       {make_boolean(2), make_mv_chain(3), testmodels::one_element()}) {
    const StructureReport rep = translation_isometry_scan(a);
    CHECK_EQ(rep.overall(), Verdict::Holds);
    CHECK_EQ(rep.elements, idx_list({0}));  // only the zero translation
  }
}

TEST_CASE("translation scan agrees with a direct bijectivity oracle") {
  for (const FiniteAlgebra& a :
       {make_boolean(2), make_mv_chain(4), testmodels::mid_zero_chain()}) {
    const StructureReport rep = translation_isometry_scan(a);
    for (int t = 0; t < a.n; ++t) {
      // Independent evaluation: image distinctness plus preservation.
      bool bijective = true;
      for (int x = 0; x < a.n && bijective; ++x)
        for (int y = x + 1; y < a.n; ++y)
          if (a.plus_at(t, x) == a.plus_at(t, y)) bijective = false;
      bool preserves = true;
      for (int x = 0; x < a.n && preserves; ++x)
        for (int y = 0; y < a.n; ++y)
          if (a.star_at(a.plus_at(t, x), a.plus_at(t, y)) != a.star_at(x, y)) {
            preserves = false;
            break;
          }
      const bool listed =
          std::count(rep.elements.begin(), rep.elements.end(), Elem::idx(t)) >
          0;
      CHECK_EQ(listed, bijective && preserves);
    }
  }
}

TEST_CASE("the unit group of every enumerated AL-monoid is trivial") {
  SearchSpec spec;
  spec.canonical = true;
  for (int size = 1; size <= 4; ++size) {
    spec.size = size;
    for (const FiniteAlgebra& fa : enumerate_all(spec)) {
      CAPTURE(fa.name);
      CHECK_EQ(invertibles(fa).elements, idx_list({fa.zero}));
    }
  }
}

TEST_CASE("star translations force Boolean structure") {
  const StructureReport b = star_translation_scan(make_boolean(2));
  CHECK_EQ(b.find("premise-star-maps-are-isometries")->verdict, Verdict::Holds);
  CHECK_EQ(b.find("conclusion-boolean-algebra")->verdict, Verdict::Holds);

  const StructureReport mv = star_translation_scan(make_mv_chain(3));
  const StructureItem* premise = mv.find("premise-star-maps-are-isometries");
  REQUIRE_NE(premise, nullptr);
  REQUIRE_EQ(premise->verdict, Verdict::Fails);
  CHECK_EQ(premise->witness.front(), Elem::idx(1));
}

TEST_CASE("positive cones") {
  SUBCASE("mv:3 is its own cone and a DRl-semigroup") {
    const PositiveConeResult r = positive_cone(make_mv_chain(3));
    REQUIRE(r.cone.has_value());
    CHECK_EQ(r.cone->n, 3);
    CHECK_EQ(r.report.overall(), Verdict::Holds);
    REQUIRE(r.drl.has_value());
    CHECK_EQ(r.drl->overall(), Verdict::Holds);
  }
  SUBCASE("boolean:2 is its own cone") {
    const PositiveConeResult r = positive_cone(make_boolean(2));
    CHECK_EQ(r.cone->n, 4);
    CHECK_EQ(r.drl->overall(), Verdict::Holds);
  }
  SUBCASE("a model with an element below zero has a proper cone") {
    const PositiveConeResult r = positive_cone(testmodels::mid_zero_chain());
    REQUIRE(r.cone.has_value());
    CHECK_EQ(r.cone->n, 2);
    CHECK_EQ(r.embedding, std::vector<int>{1, 2});
    CHECK_EQ(r.report.overall(), Verdict::Holds);
    CHECK_EQ(r.drl->overall(), Verdict::Holds);
  }
}

}  // TEST_SUITE
