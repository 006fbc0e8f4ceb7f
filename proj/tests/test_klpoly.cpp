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
#include "endokl/klpoly.hpp"

#include <sstream>

using namespace endokl;

namespace {

std::shared_ptr<const ElementTable> table_for(const char* name) {
  return std::make_shared<const ElementTable>(CoxeterSystem::weyl(RootDatum::build(name)));
}

}  // namespace

TEST_SUITE("klpoly") {

TEST_CASE("format") {
  CHECK(format_poly({}) == "0");
  CHECK(format_poly({1}) == "1");
  CHECK(format_poly({1, 1}) == "1 + q");
  CHECK(format_poly({0, 0, 2}) == "2q^2");
  CHECK(format_poly({1, -1}) == "1 - q");
  CHECK(evaluate_at_one({1, 2, 3}) == 6);
}

TEST_CASE("rank two polynomials are trivial") {
  for (const char* name : {"A2", "B2", "G2"}) {
    CAPTURE(name);
    KLEngine eng(table_for(name));
    const auto& t = eng.table();
    for (int w = 0; w < static_cast<int>(t.size()); ++w)
      for (int y = 0; y < static_cast<int>(t.size()); ++y)
        CHECK(eng.polynomial(y, w) == (t.leq(y, w) ? Poly{1} : Poly{}));
  }
}

TEST_CASE("A3 singular Schubert variety") {
  KLEngine eng(table_for("A3"));
  auto sys = eng.table().system();
  auto w = CoxeterElement::parse(sys, "2,1,3,2");
  CHECK(eng.polynomial(CoxeterElement::identity(sys), w) == Poly{1, 1});
  CHECK(eng.polynomial(CoxeterElement::parse(sys, "2"), w) == Poly{1, 1});
  CHECK(eng.polynomial(CoxeterElement::parse(sys, "1"), w) == Poly{1});
  auto w2 = CoxeterElement::parse(sys, "1,3,2,3,1");
  CHECK(eng.polynomial(CoxeterElement::identity(sys), w2) == Poly{1, 1});
}

TEST_CASE("general properties in B3") {
  KLEngine eng(table_for("B3"));
  const auto& t = eng.table();
  const int n = static_cast<int>(t.size());
  for (int w = 0; w < n; ++w)
    for (int y = 0; y < n; ++y) {
      Poly p = eng.polynomial(y, w);
      if (!t.leq(y, w)) {
        CHECK(p.empty());
        continue;
      }
      REQUIRE_FALSE(p.empty());
      CHECK(p[0] == 1);
      if (y != w) CHECK(2 * (static_cast<int>(p.size()) - 1) <= t.length(w) - t.length(y) - 1);
      for (auto c : p) CHECK(c >= 0);
      // P_{y,w} = P_{sy,w} for s a left descent of w.
      for (int s = 0; s < 3; ++s)
        if (t.at(w).is_left_descent(s)) CHECK(eng.polynomial(t.left(s, y), w) == p);
    }
}

TEST_CASE("inverse rows invert the unitriangular matrix") {
  KLEngine eng(table_for("A3"));
  const auto& t = eng.table();
  for (int w = 0; w < static_cast<int>(t.size()); ++w) {
    auto q = eng.inverse_row(w);
    for (int y : t.lower_interval(w)) {
      long long s = 0;
      for (const auto& [z, qz] : q)
        if (t.leq(y, z)) s += evaluate_at_one(eng.polynomial(y, z)) * qz;
      CHECK(s == (y == w ? 1 : 0));
    }
  }
}

TEST_CASE("affine A1 truncated table") {
  auto sys = CoxeterSystem::affine_weyl(RootDatum::build("A1"));
  KLEngine eng(std::make_shared<const ElementTable>(sys, 6));
  const auto& t = eng.table();
  for (int w = 0; w < static_cast<int>(t.size()); ++w)
    for (int y : t.lower_interval(w)) CHECK(eng.polynomial(y, w) == Poly{1});
}

TEST_CASE("threaded computation is deterministic") {
  KLEngine one(table_for("B3"));
  one.compute_all(1, false);
  KLEngine many(table_for("B3"));
  many.compute_all(4, true);
  CHECK(one.dump() == many.dump());
}

TEST_CASE("cache round trip") {
  auto cache = std::make_shared<KLCache>();
  KLEngine eng(table_for("A3"), cache);
  auto sys = eng.table().system();
  auto w = CoxeterElement::parse(sys, "2,1,3,2");
  auto e = CoxeterElement::identity(sys);
  eng.polynomial(e, w);
  CHECK(cache->size() == 1);
  CHECK(cache->dirty());
  eng.polynomial(e, w);
  CHECK(cache->stats().hits == 1);

  std::stringstream ss;
  cache->save(ss);
  CHECK(ss.str() == "KLCACHE v1\nA3 3 | e | 2,1,3,2 | 1,1\n");
  KLCache other;
  other.load(ss);
  CHECK(other.lookup(e, w) == Poly{1, 1});
  CHECK_THROWS_AS(other.insert(e, w, Poly{1}), DomainError);
}

TEST_CASE("cache rejects bad input") {
  KLCache c;
  std::istringstream v2("KLCACHE v2\n");
  CHECK_THROWS_AS(c.load(v2), ParseError);
  std::istringstream bad("KLCACHE v1\nA3 3 | e | 1\n");
  CHECK_THROWS_AS(c.load(bad), ParseError);
  std::istringstream none("");
  CHECK_THROWS_AS(c.load(none), ParseError);
}

}
