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

#include "almonoid/builtins.hpp"
#include "almonoid/catalog.hpp"
#include "almonoid/checker.hpp"
#include "almonoid/io.hpp"
#include "almonoid/parser.hpp"
#include "oracle.hpp"
#include "test_models.hpp"

using namespace almonoid;

namespace {

Eval eval_str(const Model& m, const std::string& claim_text,
              const std::vector<Elem>& env) {
  const Claim c = parse_claim(claim_text);
  return eval_term(m, c.conclusion.lhs, env);
}

}  // namespace

TEST_SUITE("term-lang checker") {

TEST_CASE("eval examples") {
  // 1 * (1 ^ 0) = 1 * 0 = 1 on the two-element chain.
  const Model b2(make_boolean(1));
  CHECK_EQ(eval_str(b2, "claim t : forall a b : (a d (a ^ b)) = 0",
                    {Elem::idx(1), Elem::idx(0)})
               .value,
           Elem::idx(1));

  const Model zi(make_int_window(10));
  CHECK_EQ(eval_str(zi, "claim t : forall x y : (x + (y d x)) = 0",
                    {Elem::num(2), Elem::num(5)})
               .value,
           Elem::num(5));

  const Model z3(make_int_window(3));
  CHECK_EQ(eval_str(z3, "claim t : forall x : (x + x) = 0", {Elem::num(2)})
               .status,
           EvalStatus::OutOfWindow);
}

TEST_CASE("One evaluates to the detected unity or fails") {
  const Model mv(make_mv_chain(3));
  const Claim c = parse_claim("claim t : forall a : (a + 1) = 1");
  CHECK_EQ(eval_term(mv, c.conclusion.lhs, std::vector<Elem>{Elem::idx(0)})
               .value,
           Elem::idx(2));
  const Model zi(make_int_window(5));
  CHECK_EQ(eval_term(zi, c.conclusion.lhs, std::vector<Elem>{Elem::num(0)})
               .status,
           EvalStatus::NoUnity);
}

TEST_CASE("star commutativity on the plain window leaves only skips") {
  const Model zi(make_int_window(20));
  const ClaimReport r = check_claim(zi, *catalog_claim("L2_5"));
  CHECK_EQ(r.verdict, Verdict::Inconclusive);
  CHECK_FALSE(r.witness.has_value());
  // 41^2 assignments; |a-b| > 20 on 420 of them.
  CHECK_EQ(r.checked + r.skipped, 41 * 41);
  CHECK_EQ(r.skipped, 420);
}

TEST_CASE("metric monotonicity fails on the integers with a valid witness") {
  const Model zi(make_int_window(20));
  const ClaimReport r = check_claim(zi, *catalog_claim("l1"));
  REQUIRE_EQ(r.verdict, Verdict::Fails);
  REQUIRE(r.witness.has_value());
  CHECK(oracle::witness_violates(zi, "l1", *r.witness));
}

TEST_CASE("one-element model satisfies the whole catalog") {
  const Model one(testmodels::one_element());
  for (const auto& r : run_catalog(one)) {
    CHECK_EQ(r.verdict, Verdict::Holds);
    CHECK_EQ(r.skipped, 0);
  }
}

TEST_CASE("unity-dependent claims are skipped without unity") {
  const Model zi(make_int_window(10));
  const ClaimReport r = check_claim(zi, *catalog_claim("UNITY"));
  CHECK_EQ(r.verdict, Verdict::Inconclusive);
  CHECK_EQ(r.note, "no-unity");
  CHECK_EQ(r.skipped, 21);
  CHECK_EQ(r.checked, 0);
}

TEST_CASE("reports are deterministic") {
  const Model m(make_mv_chain(4));
  const auto a = run_catalog(m);
  const auto b = run_catalog(m);
  REQUIRE_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i)
    CHECK_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
}

TEST_CASE("worker count does not change any report") {
  const Model zi(make_int_window(20));
  CheckOptions serial;
  CheckOptions parallel;
  parallel.jobs = 4;
  parallel.parallel_threshold = 16;  // force threading even on small spaces
  for (const char* id : {"L2_5", "l1", "L2_7", "T1_3", "AX2"}) {
    const ClaimReport a = check_claim(zi, *catalog_claim(id), serial);
    const ClaimReport b = check_claim(zi, *catalog_claim(id), parallel);
    CHECK_EQ(to_json(a).dump(), to_json(b).dump());
  }
}

TEST_CASE("fails-verdict invariants on finite models") {
  const Model mv(make_mv_chain(3));
  for (const auto& r : run_catalog(mv)) {
    if (r.verdict == Verdict::Fails) {
      REQUIRE(r.witness.has_value());
      CHECK(oracle::witness_violates(mv, r.id, *r.witness));
    }
    if (r.verdict == Verdict::Holds) {
      CHECK_EQ(r.skipped, 0);
      uint64_t space = 1;
      const Claim* c = catalog_claim(r.id);
      for (size_t i = 0; i < c->vars.size(); ++i) space *= 3;
      CHECK_EQ(r.checked, space);
    }
  }
}

TEST_CASE("the Pixley identity fails on mv:3 exactly at (x=2, y=1)") {
  const Model mv(make_mv_chain(3));
  const ClaimReport r = check_claim(mv, *catalog_claim("Tl_m1"));
  REQUIRE_EQ(r.verdict, Verdict::Fails);
  REQUIRE(r.witness.has_value());
  const Assignment& w = *r.witness;
  REQUIRE_EQ(w.size(), 2);
  CHECK_EQ(w[0].first, "x");
  CHECK_EQ(w[0].second, Elem::idx(2));
  CHECK_EQ(w[1].first, "y");
  CHECK_EQ(w[1].second, Elem::idx(1));
}

}  // TEST_SUITE
