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

// Acceptance suite: one criterion per test case, one PASS/FAIL line per
// criterion, with wall-clock budgets enforced in-process.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "almonoid/builtins.hpp"
#include "almonoid/catalog.hpp"
#include "almonoid/checker.hpp"
#include "almonoid/congruence.hpp"
#include "almonoid/constructions.hpp"
#include "almonoid/io.hpp"
#include "almonoid/profiles.hpp"
#include "almonoid/search.hpp"
#include "almonoid/structure.hpp"
#include "oracle.hpp"

using namespace almonoid;

namespace {

class Criterion {
 public:
  Criterion(int number, const char* title, double budget_seconds)
      : number_(number), title_(title), budget_(budget_seconds),
        start_(std::chrono::steady_clock::now()) {}

  void expect(bool cond, const char* what) {
    ok_ &= cond;
    CHECK_MESSAGE(cond, what);
  }

  ~Criterion() {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
            .count();
    const bool in_budget = elapsed < budget_;
    CHECK_MESSAGE(in_budget, "criterion ", number_, " exceeded its budget");
    std::printf("ACCEPTANCE %d [%s]: %s (%.2fs of %.0fs budget)\n", number_,
                title_, ok_ && in_budget ? "PASS" : "FAIL", elapsed, budget_);
    std::fflush(stdout);
  }

 private:
  int number_;
  const char* title_;
  double budget_;
  bool ok_ = true;
  std::chrono::steady_clock::time_point start_;
};

// Exit code of the installed CLI, or -1 when the binary is not advertised.
int run_cli(const std::string& args) {
  const char* cli = std::getenv("ALMONOID_CLI");
  if (cli == nullptr) return -1;
  const std::string cmd =
      std::string(cli) + " " + args + " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  if (status < 0) return 127;
  return WEXITSTATUS(status);
}

std::vector<FiniteAlgebra> enumerated_up_to(int max_size) {
  std::vector<FiniteAlgebra> out;
  SearchSpec spec;
  spec.canonical = true;
  for (int size = 1; size <= max_size; ++size) {
    spec.size = size;
    for (auto& m : enumerate_all(spec)) out.push_back(std::move(m));
  }
  return out;
}

bool axiom_family_clean(const ProfileReport& rep) {
  for (const auto& ax : rep.axioms)
    if (ax.verdict == Verdict::Fails) return false;
  return true;
}

}  // namespace

TEST_CASE("criterion 1: paper-example reproduction on the adjoined-top model") {
  Criterion crit(1, "intu:20 is an AL-monoid but not a DRl-semigroup", 10.0);

  const Model intu(make_int_with_top(20));
  const ProfileReport alm = check_al_monoid(intu);
  crit.expect(axiom_family_clean(alm),
              "all four axiom families report zero in-window violations");
  crit.expect(alm.find("ax2") != nullptr && alm.find("ax4") != nullptr,
              "axiom families are all reported");

  const ProfileReport drl = check_drl(intu);
  const AxiomResult* ax2 = drl.find("drl2.least-residual");
  crit.expect(ax2 != nullptr && ax2->verdict == Verdict::Fails,
              "the least-residual axiom fails");
  bool involves_u = false;
  if (ax2 != nullptr && ax2->witness)
    for (const auto& [_, e] : *ax2->witness)
      if (e == Elem::u()) involves_u = true;
  crit.expect(involves_u, "the witness pair involves u");
  crit.expect(drl.overall() == Verdict::Fails, "drl profile fails overall");

  if (run_cli("") != -1) {
    crit.expect(run_cli("check intu:20 --profile al-monoid") == 0,
                "CLI: check intu:20 --profile al-monoid exits 0");
    crit.expect(run_cli("check intu:20 --profile drl") == 1,
                "CLI: check intu:20 --profile drl exits 1");
  }
}

TEST_CASE("criterion 2: independence of axiom 2 with the paper computation") {
  Criterion crit(2, "intuv:20 satisfies (1),(3),(4) and fails (2)", 10.0);

  const IndependenceReport rep = independence_report(20, 5);
  const IndependenceDirection& dir = rep.directions.at(0);
  crit.expect(dir.established, "direction established");
  crit.expect(dir.model == "intuv:20", "witness model is intuv:20");
  crit.expect(dir.satisfied ==
                  std::vector<std::string>{"ax1", "ax3", "ax4"},
              "axioms (1),(3),(4) have no violation");
  crit.expect(dir.violated == "ax2", "axiom (2) is the violated one");
  const std::vector<std::string> expected = {
      "v^u = u", "v*(v^u) = v", "v*(v^u)+(v^u) = u", "v|u = v", "u != v"};
  crit.expect(dir.computation == expected,
              "the exact computation v*(v^u)+(v^u) = u != v is reproduced");

  if (run_cli("") != -1)
    crit.expect(run_cli("independence") == 0, "CLI: independence exits 0");
}

TEST_CASE("criterion 3: catalog on compliant models") {
  Criterion crit(3, "metric consequences hold with zero skips", 60.0);

  const std::vector<std::string> required = {
      "AX2",   "AX4",   "CONTR_plus", "CONTR_join", "CONTR_meet",
      "CONTR_star", "L2_1", "L2_2", "L2_3", "L2_4", "L2_5", "L2_6",
      "L2_7",  "T23_1", "T23_2", "T23_3", "T23_4", "T23_4j", "L9",
      "STARFACT", "SYMDIFF"};

  std::vector<Model> models;
  for (int k = 1; k <= 3; ++k) models.emplace_back(make_boolean(k));
  for (int n = 3; n <= 5; ++n) models.emplace_back(make_mv_chain(n));
  for (const FiniteAlgebra& fa : enumerated_up_to(4)) models.emplace_back(fa);

  for (const Model& m : models)
    for (const auto& id : required) {
      const ClaimReport r = check_claim(m, *catalog_claim(id));
      CAPTURE(m.name());
      CAPTURE(id);
      crit.expect(r.verdict == Verdict::Holds, "required claim holds");
      crit.expect(r.skipped == 0, "no skipped assignments");
    }
}

TEST_CASE("criterion 4: discrepancy detection with oracle-validated witnesses") {
  Criterion crit(4, "the paper's general claims fail on the integers", 30.0);

  const Model zi(make_int_window(20));
  const std::vector<std::string> must_fail = {"l1",    "l6",    "T1_2",
                                              "T1_3",  "l10",   "Tl_m1",
                                              "Tl_m2", "Tl_m3"};
  for (const auto& id : must_fail) {
    const ClaimReport r = check_claim(zi, *catalog_claim(id));
    CAPTURE(id);
    crit.expect(r.verdict == Verdict::Fails, "claim fails on int:20");
    crit.expect(r.witness.has_value(), "witness present");
    if (r.witness)
      crit.expect(oracle::witness_violates(zi, id, *r.witness),
                  "witness re-evaluates to a violation in the oracle");
  }

  const Model mv(make_mv_chain(3));
  const ClaimReport m1 = check_claim(mv, *catalog_claim("Tl_m1"));
  crit.expect(m1.verdict == Verdict::Fails, "m(x,y,y)=x fails on mv:3");
  crit.expect(m1.witness.has_value() && (*m1.witness)[0].second == Elem::idx(2) &&
                  (*m1.witness)[1].second == Elem::idx(1),
              "witness is (x=2, y=1)");
}

TEST_CASE("criterion 5: variety closure at size three") {
  Criterion crit(5, "products, subalgebras, quotients stay AL-monoids", 120.0);

  const auto models = enumerated_up_to(3);
  crit.expect(models.size() == 4, "1 + 1 + 2 models of size up to three");

  for (const FiniteAlgebra& a : models)
    for (const FiniteAlgebra& b : models) {
      const FiniteAlgebra p = product(a, b);
      crit.expect(check_al_monoid(Model(p)).overall() == Verdict::Holds,
                  "product passes check_al_monoid");
      crit.expect(!oracle::al_monoid_violation(p).has_value(),
                  "product passes the independent axiom check");
    }

  for (const FiniteAlgebra& a : models) {
    std::set<std::vector<int>> seen;
    for (unsigned mask = 1; mask < (1u << a.n); ++mask) {
      std::vector<int> seed;
      for (int i = 0; i < a.n; ++i)
        if (mask & (1u << i)) seed.push_back(i);
      const SubalgebraResult sub = subalgebra(a, seed);
      if (!seen.insert(sub.embedding).second) continue;
      crit.expect(check_al_monoid(Model(sub.algebra)).overall() ==
                      Verdict::Holds,
                  "subalgebra passes check_al_monoid");
    }

    for (const Congruence& theta : all_congruences(a)) {
      const QuotientResult q = congruence_quotient(a, theta);
      crit.expect(check_al_monoid(Model(q.algebra)).overall() ==
                      Verdict::Holds,
                  "quotient passes check_al_monoid");
      crit.expect(check_claim(Model(q.algebra), *catalog_claim("L2_6"))
                          .verdict == Verdict::Holds,
                  "identity of indiscernibles holds on the quotient");
      crit.expect(check_homomorphism(q.projection(a)).holds(),
                  "canonical epimorphism preserves the operations");
    }
  }
}

TEST_CASE("criterion 6: oracle equivalence on every small finite model") {
  Criterion crit(6, "engine and nested-loop oracle agree", 600.0);

  std::vector<FiniteAlgebra> universe = enumerated_up_to(4);
  universe.push_back(make_boolean(1));
  universe.push_back(make_boolean(2));
  for (int n = 2; n <= 4; ++n) universe.push_back(make_mv_chain(n));
  {
    FiniteAlgebra one("one", 1, 0);
    universe.push_back(one);
    FiniteAlgebra patched_plus = make_boolean(1);
    patched_plus.set_plus(1, 1, 0);
    universe.push_back(patched_plus);
    FiniteAlgebra patched_star = make_boolean(1);
    patched_star.set_star(0, 1, 0);
    universe.push_back(patched_star);
  }

  for (const FiniteAlgebra& fa : universe) {
    const Model m(fa);
    for (const Claim& c : catalog()) {
      const ClaimReport engine = check_claim(m, c);
      const oracle::Outcome expected = oracle::check(m, c.id);
      CAPTURE(fa.name);
      CAPTURE(c.id);
      crit.expect(engine.verdict == expected.verdict, "verdict agreement");
      if (engine.verdict == Verdict::Fails) {
        crit.expect(engine.witness.has_value(), "witness present");
        if (engine.witness)
          crit.expect(oracle::witness_violates(m, c.id, *engine.witness),
                      "witness validity agreement");
      }
    }
  }
}

TEST_CASE("criterion 7: enumeration fixtures and determinism") {
  Criterion crit(7, "model counts are locked regression values", 600.0);

  // Counts up to isomorphism, locked after the first oracle-verified run.
  const std::vector<size_t> locked = {1, 1, 2, 5};
  SearchSpec spec;
  spec.canonical = true;
  for (int size = 1; size <= 4; ++size) {
    spec.size = size;
    const auto once = enumerate_all(spec);
    CAPTURE(size);
    crit.expect(once.size() == locked[size - 1], "count matches the fixture");
    for (const FiniteAlgebra& fa : once)
      crit.expect(!oracle::al_monoid_violation(fa).has_value(),
                  "every emitted model passes the independent axiom check");

    const auto again = enumerate_all(spec);
    bool same = again.size() == once.size();
    for (size_t i = 0; same && i < once.size(); ++i)
      same = write_algebra(once[i]) == write_algebra(again[i]);
    crit.expect(same, "two runs emit identical sequences");

    SearchSpec jobs = spec;
    jobs.jobs = 4;
    const auto parallel = enumerate_all(jobs);
    bool same_par = parallel.size() == once.size();
    for (size_t i = 0; same_par && i < once.size(); ++i)
      same_par = write_algebra(once[i]) == write_algebra(parallel[i]);
    crit.expect(same_par, "worker count does not change the sequence");
  }
}

TEST_CASE("criterion 8: structure theorems at desk scale") {
  Criterion crit(8, "complements, isometries and positive cones", 600.0);

  const StructureReport b4 = complemented(make_boolean(2));
  crit.expect(b4.elements.size() == 4, "all four elements complemented");
  crit.expect(b4.find("complement-eq-star-one")->verdict == Verdict::Holds,
              "a' = a*1 on boolean:2");
  crit.expect(b4.overall() == Verdict::Holds, "Boolean laws verified");

  const StructureReport mvc = complemented(make_mv_chain(3));
  crit.expect(mvc.elements ==
                  std::vector<Elem>{Elem::idx(0), Elem::idx(2)},
              "complemented(mv:3) = {0, 2}");
  const StructureReport mvi = idempotents(Model(make_mv_chain(3)));
  crit.expect(mvi.elements ==
                  std::vector<Elem>{Elem::idx(0), Elem::idx(2)},
              "idempotents(mv:3) = {0, 2}");

  for (const FiniteAlgebra& fa : enumerated_up_to(4)) {
    CAPTURE(fa.name);
    crit.expect(translation_isometry_scan(fa).overall() == Verdict::Holds,
                "translation isometry iff invertible");
    const PositiveConeResult cone = positive_cone(fa);
    crit.expect(cone.cone.has_value() &&
                    cone.report.overall() == Verdict::Holds,
                "positive cone closed with a-b = a*(a^b)");
    crit.expect(cone.drl.has_value() &&
                    cone.drl->overall() == Verdict::Holds,
                "positive cone is a DRl-semigroup");
  }
}

TEST_CASE("criterion 9: congruence lab") {
  Criterion crit(9, "congruence lattices, permutability, distributivity",
                 600.0);

  const auto mv_cons = all_congruences(make_mv_chain(3));
  crit.expect(mv_cons.size() == 2 &&
                  mv_cons.front() == Congruence::identity(3) &&
                  mv_cons.back() == Congruence::full(3),
              "Con(mv:3) = {identity, full}");
  crit.expect(all_congruences(make_boolean(2)).size() == 4,
              "Con(boolean:2) has exactly four members");
  crit.expect(check_con_permutable(make_mv_chain(3)).holds &&
                  check_con_permutable(make_boolean(2)).holds,
              "both models are congruence permutable");
  crit.expect(check_con_distributive(make_mv_chain(3)).holds &&
                  check_con_distributive(make_boolean(2)).holds,
              "both models are congruence distributive");

  for (const FiniteAlgebra& fa : enumerated_up_to(4)) {
    const auto pix = pixley_check(Model(fa));
    const bool all_pixley = pix[0].verdict == Verdict::Holds &&
                            pix[1].verdict == Verdict::Holds &&
                            pix[2].verdict == Verdict::Holds;
    if (all_pixley) {
      CAPTURE(fa.name);
      crit.expect(check_con_permutable(fa).holds,
                  "Pixley identities imply permutability");
      crit.expect(check_con_distributive(fa).holds,
                  "Pixley identities imply distributivity");
    }
  }
}
