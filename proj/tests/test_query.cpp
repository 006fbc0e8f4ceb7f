// Copyright 2026 The endokl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "endokl/query.hpp"

#include <cstdio>
#include <filesystem>

using namespace endokl;

TEST_SUITE("query") {

TEST_CASE("matrix JSON round trip") {
  for (const char* lam : {"1,1/1", "2,1/3", "1,1/2"}) {
    auto mm = multiplicity_matrix(
        stratification_datum(RootDatum::build("A2"), RationalCoweight::parse(lam)));
    MatrixRecord rec = matrix_record(mm);
    Json j = Json::parse(to_json(rec).dump());
    CHECK(matrix_record_from_json(j) == rec);
    Session s;
    Json q = s.run("multiplicity", {{"type", "A"}, {"rank", 2}, {"lambda", lam}});
    CHECK(matrix_record_from_json(q) == rec);
  }
  CHECK_THROWS_AS(matrix_record_from_json(Json{{"type", "A2"}}), ParseError);
}

TEST_CASE("commands") {
  Session s;
  CHECK(s.run("kl", {{"type", "A3"}, {"y", "e"}, {"w", "2,1,3,2"}})["polynomial"] == "1 + q");
  CHECK(s.run("kl", {{"type", "A1"}, {"affine", true}, {"y", "e"}, {"w", "0,1,0"}})["polynomial"] ==
        "1");
  Json roots = s.run("roots", {{"type", "B2"}});
  CHECK(roots["positive_roots"].size() == 4);
  CHECK(roots["rho"] == Json{"2", "3/2"});
  CHECK(s.run("weyl", {{"type", "G2"}})["count"] == 12);
  CHECK(s.run("weyl", {{"type", "A1"}, {"affine", true}, {"translation", "1"}})["word"] == "0,1");
  Json endo = s.run("endoscopy", {{"type", "B2"}, {"lambda", "3,2/2"}});
  CHECK(endo["endoscopic_type"] == "A1xA1");
  CHECK(endo["group_order"] == 4);
  CHECK(s.run("strata", {{"type", "A2"}, {"lambda", "1,1"}, {"alpha", "1,1"}})["labels"].size() == 3);
  Json ch = s.run("character", {{"type", "A2"}, {"lambda", "4,5/3"}, {"depth", 8}});
  CHECK(ch["total"] == 3);
  Json fold = s.run("fold", {{"source", "D4"}, {"sigma", "3,2,4,1"}, {"k", "1/3"}});
  CHECK(fold["d"] == 3);
  CHECK(fold["invariant_type"] == "G2");
  CHECK(fold["untwist"] == "untwisted");
  Json aff = s.run("affine", {{"type", "A1"}, {"mu", "1"}, {"a", 2}, {"b", -6}, {"bound", "0,1"}});
  CHECK(aff["labels"] == Json{"e", "1"});
  CHECK(aff["level_class"] == "positive");
  Json crit = s.run("affine", {{"type", "A1"}, {"mu", "1"}, {"a", 2}, {"b", 0}, {"beta", "0"},
                               {"beta_delta", 2}});
  CHECK(crit["pairs"].size() == 1);
  Json oracle = s.run("oracle-check", {{"type", "B2"}, {"lambda", "3,2/2"}});
  CHECK(oracle["agree"] == true);
}

TEST_CASE("request errors") {
  Session s;
  CHECK_THROWS_AS(s.run("nope", Json::object()), ParseError);
  CHECK_THROWS_AS(s.run("kl", {{"type", "A3"}, {"y", "e"}}), ParseError);
  CHECK_THROWS_AS(s.run("kl", {{"type", "A3"}, {"y", "e"}, {"w", "1"}, {"extra", 1}}), ParseError);
  CHECK_THROWS_AS(s.run("roots", {{"type", 3}}), ParseError);
  CHECK_THROWS_AS(s.run("roots", {{"type", "Q3"}}), DomainError);
  CHECK_THROWS_AS(s.run("multiplicity", {{"type", "A2"}, {"lambda", "1,1/0"}}), ParseError);
  CHECK_THROWS_AS(s.run("affine", {{"type", "A1"}, {"mu", "1"}, {"a", 0}, {"b", 1}}), DomainError);
  CHECK_THROWS_AS(s.run("fold", {{"source", "A3"}, {"sigma", "2,1,3"}}), DomainError);
}

TEST_CASE("cache export and import reproduce answers") {
  const auto path = std::filesystem::temp_directory_path() / "endokl_query_cache.txt";
  std::filesystem::remove(path);
  Json first;
  {
    Session s;
    first = s.run("multiplicity", {{"type", "A3"}, {"lambda", "3,4,3/2"}});
    CHECK(s.run("cache", {{"action", "stats"}})["entries"].get<long long>() > 0);
    s.run("cache", {{"action", "export"}, {"path", path.string()}});
  }
  Session fresh;
  fresh.run("cache", {{"action", "import"}, {"path", path.string()}});
  Json again = fresh.run("multiplicity", {{"type", "A3"}, {"lambda", "3,4,3/2"}});
  CHECK(again == first);
  Json st = fresh.run("cache", {{"action", "stats"}});
  CHECK(st["hits"].get<long long>() > 0);
  CHECK(st["misses"].get<long long>() == 0);
  {
    Session backed(path.string());
    CHECK(backed.cache()->size() == fresh.cache()->size());
  }
  std::filesystem::remove(path);
}

}
