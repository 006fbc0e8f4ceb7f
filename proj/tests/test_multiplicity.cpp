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
#include "endokl/multiplicity.hpp"

using namespace endokl;

namespace {

MultiplicityMatrix mm_for(const char* type, const char* lambda) {
  return multiplicity_matrix(
      stratification_datum(RootDatum::build(type), RationalCoweight::parse(lambda)));
}

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

TEST_SUITE("multiplicity") {

TEST_CASE("A1 regular integral") {
  auto mm = mm_for("A1", "1");
  CHECK(mm.entries == IntMatrix{{1, 1}, {0, 1}});
  CHECK(mm.labels[1].to_string() == "1");
}

TEST_CASE("A1 with a half-integral pairing") {
  auto mm = mm_for("A1", "1/4");
  CHECK(mm.entries == IntMatrix{{1}});
}

TEST_CASE("A2 regular integral follows the Bruhat order") {
  auto mm = mm_for("A2", "1,1");
  REQUIRE(mm.labels.size() == 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(mm.entries[i][j] == (mm.order[i][j] ? 1 : 0));
  IntMatrix inv = simple_in_verma_inversion(mm.entries);
  CHECK(product(mm.entries, inv) == identity(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (mm.order[i][j]) {
        int gap = mm.labels[j].length() - mm.labels[i].length();
        CHECK(inv[i][j] == (gap % 2 ? -1 : 1));
      }
}

TEST_CASE("A2 singular and rational") {
  auto sing = mm_for("A2", "2,1/3");
  CHECK(sing.entries == IntMatrix{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
  auto half = mm_for("A2", "1,1/2");
  CHECK(half.entries == IntMatrix{{1, 1}, {0, 1}});
}

TEST_CASE("A3 carries a multiplicity two") {
  auto mm = mm_for("A3", "3,4,3/2");
  long long mx = 0;
  for (const auto& row : mm.entries)
    for (auto v : row) mx = std::max(mx, v);
  CHECK(mx == 2);
  CHECK(product(mm.entries, simple_in_verma_inversion(mm.entries)) == identity(24));
}

TEST_CASE("support is upward in the order") {
  for (const char* lam : {"1,1,1", "2,1,0/1", "1,1,1/2", "1,2,3/4"}) {
    auto mm = mm_for("B3", lam);
    for (std::size_t i = 0; i < mm.labels.size(); ++i) {
      CHECK(mm.entries[i][i] == 1);
      for (std::size_t j = 0; j < mm.labels.size(); ++j)
        if (mm.entries[i][j] != 0) CHECK(mm.order[i][j]);
    }
  }
}

TEST_CASE("inversion") {
  CHECK(simple_in_verma_inversion({{1, 1}, {0, 1}}) == IntMatrix{{1, -1}, {0, 1}});
  CHECK(simple_in_verma_inversion(identity(3)) == identity(3));
  CHECK_THROWS_AS(simple_in_verma_inversion({{1, 0}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(simple_in_verma_inversion({{2}}), DomainError);
}

TEST_CASE("kostant q-partitions") {
  RootDatum a2 = RootDatum::build("A2");
  CHECK(kostant_q(a2, {0, 0}) == Poly{1});
  CHECK(kostant_q(a2, {1, 1}) == Poly{0, 1, 1});
  CHECK(kostant_q(a2, {2, 0}) == Poly{0, 0, 1});
  CHECK(kostant_q(a2, {-1, 0}).empty());
  auto a1 = costalk_character(RootDatum::build("A1"), 3);
  CHECK(a1.size() == 4);
  CHECK(a1.at({3}) == Poly{0, 0, 0, 1});
  CHECK(costalk_character(a2, 0).size() == 1);
  // B2: the dual has coroots (1,0), (0,1), (2,1), (1,1).
  RootDatum b2 = RootDatum::build("B2");
  CHECK(kostant_q(b2, {2, 1}) == Poly{0, 1, 1, 1});
}

TEST_CASE("weyl dimension") {
  RootDatum a2 = RootDatum::build("A2");
  CHECK(weyl_dimension(a2, {0, 0}) == 1);
  CHECK(weyl_dimension(a2, {1, 1}) == 8);
  CHECK(weyl_dimension(a2, {Rational(2, 3), Rational(1, 3)}) == 3);
  CHECK(weyl_dimension(RootDatum::build("A1"), {Rational(5, 2)}) == 6);
  RootDatum g2 = RootDatum::build("G2");
  long long d1 = weyl_dimension(g2, {Rational(2), Rational(3)});
  long long d2 = weyl_dimension(g2, {Rational(1), Rational(2)});
  CHECK(std::min(d1, d2) == 7);
  CHECK(std::max(d1, d2) == 14);
  CHECK_THROWS_AS(weyl_dimension(a2, {-1, 0}), DomainError);
}

TEST_CASE("finite dimensional simple characters") {
  auto mm = mm_for("A2", "4,5/3");  // rho + omega_1
  auto ch = simple_character(mm, 0, 8);
  long long dim = 0;
  for (const auto& [a, c] : ch) {
    CHECK(c > 0);
    dim += c;
  }
  CHECK(dim == 3);
  auto rho = mm_for("A2", "1,1");
  CHECK(simple_character(rho, 0, 8) == std::map<IntVec, long long>{{{0, 0}, 1}});
}

}
