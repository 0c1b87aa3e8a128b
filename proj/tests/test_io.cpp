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

#include <fstream>
#include <sstream>

#include "almonoid/builtins.hpp"
#include "almonoid/catalog.hpp"
#include "almonoid/checker.hpp"
#include "almonoid/errors.hpp"
#include "almonoid/io.hpp"
#include "test_models.hpp"

using namespace almonoid;

namespace {

FiniteAlgebra reparse(const FiniteAlgebra& a) {
  std::istringstream in(write_algebra(a));
  return read_algebra(in, a.name);
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("algebra text format round-trips byte-exactly") {
  for (const FiniteAlgebra& a :
       {make_boolean(2), make_mv_chain(4), testmodels::m3_diamond()}) {
    const FiniteAlgebra b = reparse(a);
    CHECK(a == b);
    CHECK_EQ(write_algebra(a), write_algebra(b));
  }
}

TEST_CASE("comments and blank lines are accepted") {
  std::istringstream in(
      "# two-element chain\n\nsize 2\nzero 0\nplus\n0 1  # identity row\n"
      "1 1\njoin\n0 1\n1 1\nmeet\n0 0\n0 1\nstar\n0 1\n1 0\n");
  const FiniteAlgebra a = read_algebra(in, "b2");
  CHECK(a == make_boolean(1));
}

TEST_CASE("derived star blocks compute the metric from residuals") {
  std::istringstream in(
      "size 2\nzero 0\nplus\n0 1\n1 1\njoin\n0 1\n1 1\nmeet\n0 0\n0 1\n"
      "star derived\n");
  const FiniteAlgebra a = read_algebra(in, "b2d");
  CHECK(a.star == make_boolean(1).star);
}

TEST_CASE("derived star on a non-DRl table set is rejected") {
  std::ostringstream tables;
  const FiniteAlgebra m3 = testmodels::m3_diamond();
  const std::string text = write_algebra(m3);
  const std::string derived =
      text.substr(0, text.find("star\n")) + "star derived\n";
  std::istringstream in(derived);
  CHECK_THROWS_AS(read_algebra(in, "m3d"), NotDRlError);
}

TEST_CASE("format errors carry positions") {
  std::istringstream short_row(
      "size 2\nzero 0\nplus\n0 1\n1\njoin\n0 1\n1 1\nmeet\n0 0\n0 1\nstar\n"
      "0 1\n1 0\n");
  CHECK_THROWS_AS(read_algebra(short_row, "x"), SyntaxError);

  std::istringstream bad_entry(
      "size 2\nzero 0\nplus\n0 1\n1 7\njoin\n0 1\n1 1\nmeet\n0 0\n0 1\nstar\n"
      "0 1\n1 0\n");
  CHECK_THROWS_AS(read_algebra(bad_entry, "x"), MalformedTableError);

  std::istringstream bad_zero("size 2\nzero 9\nplus\n");
  CHECK_THROWS_AS(read_algebra(bad_zero, "x"), MalformedTableError);

  std::istringstream trailing(
      "size 1\nzero 0\nplus\n0\njoin\n0\nmeet\n0\nstar\n0\nextra\n");
  CHECK_THROWS_AS(read_algebra(trailing, "x"), SyntaxError);
}

TEST_CASE("load_model resolves builtins and files") {
  CHECK(load_model("mv:4").is_finite());
  CHECK_FALSE(load_model("intu:5").is_finite());
  CHECK_THROWS(load_model("/no/such/file.alg"));
}

TEST_CASE("claim reports serialize with the stable schema") {
  const Model m(make_mv_chain(3));
  const auto rep = check_claim(m, *catalog_claim("AX2"));
  const nlohmann::json j = to_json(rep);
  CHECK(j.contains("id"));
  CHECK(j.contains("verdict"));
  CHECK(j.contains("witness"));
  CHECK(j.contains("checked"));
  CHECK(j.contains("skipped"));
  CHECK_EQ(j["verdict"], "holds");
  CHECK(j["witness"].is_null());

  const auto fail = check_claim(m, *catalog_claim("Tl_m1"));
  const nlohmann::json jf = to_json(fail);
  CHECK_EQ(jf["verdict"], "fails");
  CHECK_EQ(jf["witness"]["x"], "2");
  CHECK_EQ(jf["witness"]["y"], "1");
}

TEST_CASE("partition files parse as class lists") {
  const std::string path = "/tmp/almonoid_test_partition.json";
  {
    std::ofstream out(path);
    out << "[[0,1],[2,3]]";
  }
  const Congruence c = read_partition_file(path, 4);
  CHECK(c.same(0, 1));
  CHECK(c.same(2, 3));
  CHECK_FALSE(c.same(1, 2));
}

}  // TEST_SUITE
