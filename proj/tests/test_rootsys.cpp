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
#include "endokl/rootsys.hpp"

using namespace endokl;

TEST_SUITE("rootsys") {

TEST_CASE("positive root counts") {
  struct Case {
    const char* name;
    std::size_t count;
  };
  for (Case c : {Case{"A1", 1}, Case{"A3", 6}, Case{"B2", 4}, Case{"B3", 9}, Case{"C3", 9},
                 Case{"D4", 12}, Case{"G2", 6}, Case{"F4", 24}, Case{"E6", 36}, Case{"E7", 63},
                 Case{"E8", 120}}) {
    CAPTURE(c.name);
    CHECK(RootDatum::build(c.name).positive_roots().size() == c.count);
  }
}

TEST_CASE("invalid families") {
  CHECK_THROWS_AS(RootDatum::build('A', 0), DomainError);
  CHECK_THROWS_AS(RootDatum::build('D', 3), DomainError);
  CHECK_THROWS_AS(RootDatum::build('E', 9), DomainError);
  CHECK_THROWS_AS(RootDatum::build("X2"), DomainError);
}

TEST_CASE("highest root and rho in A2") {
  RootDatum a2 = RootDatum::build("A2");
  const Root& th = a2.positive_roots()[a2.highest_root_index()];
  CHECK(th.root == IntVec{1, 1});
  CHECK(th.coroot == IntVec{1, 1});
  CHECK(a2.rho() == RatVec{1, 1});
}

TEST_CASE("short and long coroots in B2") {
  RootDatum b2 = RootDatum::build("B2");
  // alpha_2 short: its coroot is long.
  for (const Root& r : b2.positive_roots())
    if (r.root == IntVec{1, 1}) CHECK(r.coroot == IntVec{2, 1});
  CHECK(b2.dual().name() == "B2");
  CHECK(b2.dual().cartan() == IntMatrix{{2, -2}, {-1, 2}});
}

TEST_CASE("pairing with simple roots recovers the Cartan matrix") {
  for (const char* name : {"A3", "B3", "C3", "G2", "F4"}) {
    RootDatum d = RootDatum::build(name);
    for (int i = 0; i < d.rank(); ++i)
      for (int j = 0; j < d.rank(); ++j)
        CHECK(d.pairing(d.simple(i).coroot, d.simple(j).root) == d.cartan()[i][j]);
  }
}

TEST_CASE("reflections permute coroots") {
  RootDatum g2 = RootDatum::build("G2");
  for (int i = 0; i < 2; ++i)
    for (const Root& r : g2.positive_roots()) {
      IntVec v = g2.reflect(i, r.coroot);
      bool found = false;
      for (const Root& s : g2.positive_roots()) {
        IntVec neg = s.coroot;
        for (auto& x : neg) x = -x;
        found = found || s.coroot == v || neg == v;
      }
      CHECK(found);
    }
}

TEST_CASE("weyl orders") {
  CHECK(RootDatum::build("A4").weyl_order() == 120);
  CHECK(RootDatum::build("B3").weyl_order() == 48);
  CHECK(RootDatum::build("D4").weyl_order() == 192);
  CHECK(RootDatum::build("G2").weyl_order() == 12);
  CHECK(RootDatum::build("F4").weyl_order() == 1152);
  CHECK(RootDatum::build("E6").weyl_order() == 51840);
}

TEST_CASE("rational coweight parsing") {
  RationalCoweight l = RationalCoweight::parse("1,1/2");
  CHECK(l.mu == IntVec{1, 1});
  CHECK(l.n == 2);
  CHECK(l.value() == RatVec{Rational(1, 2), Rational(1, 2)});
  CHECK(RationalCoweight::parse("3,-1").n == 1);
  CHECK_THROWS_AS(RationalCoweight::parse("1,x/2"), ParseError);
  CHECK_THROWS_AS(RationalCoweight::parse("1,1/0"), ParseError);
  CHECK_THROWS_AS(RationalCoweight::parse(""), ParseError);
}

TEST_CASE("identify cartan types") {
  CHECK(identify_cartan_type(RootDatum::build("C3").cartan()) == "C3");
  CHECK(identify_cartan_type(RootDatum::build("B3").cartan()) == "B3");
  CHECK(identify_cartan_type(IntMatrix{{2, 0}, {0, 2}}) == "A1xA1");
  CHECK(identify_cartan_type(RootDatum::build("E7").cartan()) == "E7");
}

TEST_CASE("malformed cartan matrices") {
  CHECK_THROWS_AS(RootDatum::from_cartan({{2, -1}, {0, 2}}, "bad"), DomainError);
  CHECK_THROWS_AS(RootDatum::from_cartan({{2, -2}, {-2, 2}}, "affine"), DomainError);
}

}
