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
#include "endokl/folding.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace endokl;

namespace {

int order_of(const std::vector<int>& p) {
  std::vector<int> cur = p;
  for (int k = 1;; ++k) {
    bool id = true;
    for (std::size_t i = 0; i < cur.size(); ++i) id = id && cur[i] == static_cast<int>(i);
    if (id) return k;
    std::vector<int> next(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] = p[cur[i]];
    cur = next;
  }
}

// First diagram automorphism of the given order, by brute force.
std::vector<int> automorphism(const RootDatum& d, int order) {
  std::vector<int> p(d.rank());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < d.rank() && ok; ++i)
      for (int j = 0; j < d.rank() && ok; ++j) ok = d.cartan()[p[i]][p[j]] == d.cartan()[i][j];
    if (ok && order_of(p) == order) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return {};
}

bool same_up_to_relabeling(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a[p[i]][p[j]] == b[i][j];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.size(), IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace

TEST_SUITE("folding") {

TEST_CASE("identity folding") {
  RootDatum a3 = RootDatum::build("A3");
  auto fd = fold(a3, {0, 1, 2});
  CHECK(fd.d == 1);
  CHECK(fd.invariant_cartan == a3.cartan());
  CHECK(fd.invariant_type == "A3");
  CHECK(fd.d_i == std::vector<int>{1, 1, 1});
}

TEST_CASE("A3 flip") {
  auto fd = fold(RootDatum::build("A3"), {2, 1, 0});
  CHECK(fd.d == 2);
  CHECK(fd.invariant_type == "C2");
  CHECK(fd.dual_type == "B2");
  CHECK(fd.orbits == std::vector<std::vector<int>>{{0, 2}, {1}});
  CHECK(fd.d_i == std::vector<int>{2, 1});
  CHECK(fd.invariant_cartan == IntMatrix{{2, -2}, {-1, 2}});
  CHECK(fd.dual_cartan == RootDatum::build("B2").cartan());
  CHECK(!fd.twisted);
}

TEST_CASE("classical folding table") {
  struct Case {
    const char* source;
    int order;
    const char* invariant;
    const char* dual;
  };
  for (const Case& c : {Case{"A3", 2, "C2", "B2"}, Case{"A5", 2, "C3", "B3"},
                        Case{"D4", 2, "B3", "C3"}, Case{"D4", 3, "G2", "G2"},
                        Case{"D5", 2, "B4", "C4"}, Case{"E6", 2, "F4", "F4"}}) {
    CAPTURE(c.source);
    RootDatum src = RootDatum::build(c.source);
    auto sigma = automorphism(src, c.order);
    REQUIRE(!sigma.empty());
    auto fd = fold(src, sigma);
    CHECK(fd.d == c.order);
    CHECK(fd.invariant_type == c.invariant);
    CHECK(fd.dual_type == c.dual);
    CHECK(*std::max_element(fd.d_i.begin(), fd.d_i.end()) == fd.d);
    // Dual side against the built tables; C2 is the transpose of B2.
    IntMatrix dual_table = std::string(c.dual) == "C2" ? transpose(RootDatum::build("B2").cartan())
                                                       : RootDatum::build(c.dual).cartan();
    CHECK(same_up_to_relabeling(fd.dual_cartan, dual_table));
    CHECK(same_up_to_relabeling(fd.invariant_cartan, transpose(dual_table)));
    REQUIRE(fd.invariant);
    CHECK(fd.invariant->positive_roots().size() == RootDatum::build(c.dual).positive_roots().size());
  }
}

TEST_CASE("A2n flip is flagged") {
  for (const char* type : {"A2", "A4"}) {
    RootDatum src = RootDatum::build(type);
    std::vector<int> flip(src.rank());
    for (int i = 0; i < src.rank(); ++i) flip[i] = src.rank() - 1 - i;
    auto fd = fold(src, flip);
    CHECK(fd.twisted);
    CHECK(!fd.invariant);
    CHECK(fd.d == 2);
  }
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(fold(RootDatum::build("A3"), {1, 0, 2}), DomainError);
  CHECK_THROWS_AS(fold(RootDatum::build("A3"), {0, 0, 2}), DomainError);
  CHECK_THROWS_AS(fold(RootDatum::build("A3"), {0, 1}), DomainError);
  CHECK_THROWS_AS(fold(RootDatum::build("B3"), {0, 1, 2}), DomainError);
}

TEST_CASE("coinvariant map") {
  auto fd = fold(RootDatum::build("A3"), {2, 1, 0});
  CHECK(coinvariant_map_a(fd, {1, 0, 0}) == IntVec{1, 0, 1});
  CHECK(coinvariant_map_a(fd, {0, 1, 0}) == IntVec{0, 2, 0});
  CHECK(coinvariant_map_a(fd, {0, 0, 0}) == IntVec{0, 0, 0});
  CHECK(sigma_act(fd, {1, 2, 3}) == IntVec{3, 2, 1});
}

TEST_CASE("coinvariant map is well defined and injective") {
  std::mt19937 rng(20260);
  std::uniform_int_distribution<long long> coef(-5, 5);
  for (auto [type, order] : {std::pair{"A3", 2}, std::pair{"D4", 3}, std::pair{"E6", 2},
                             std::pair{"A5", 2}, std::pair{"D5", 2}}) {
    CAPTURE(type);
    RootDatum src = RootDatum::build(type);
    auto fd = fold(src, automorphism(src, order));
    for (int trial = 0; trial < 100; ++trial) {
      IntVec alpha(src.rank()), beta(src.rank());
      for (auto& c : alpha) c = coef(rng);
      for (auto& c : beta) c = coef(rng);
      IntVec sb = sigma_act(fd, beta);
      IntVec shifted = alpha;
      for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += sb[i] - beta[i];
      IntVec a = coinvariant_map_a(fd, alpha);
      CHECK(coinvariant_map_a(fd, shifted) == a);
      CHECK(sigma_act(fd, a) == a);
      CHECK(coinvariant_class(fd, shifted) == coinvariant_class(fd, alpha));
    }
    // Kernel: a(alpha) = 0 exactly on the zero coinvariant class.
    for (const IntVec& v : cone_vectors(src.rank(), 3)) {
      IntVec alpha = v;
      for (std::size_t i = 0; i + 1 < alpha.size(); i += 2) alpha[i] = -alpha[i];
      bool zero_a = coinvariant_map_a(fd, alpha) == IntVec(src.rank(), 0);
      bool zero_class = coinvariant_class(fd, alpha) == IntVec(fd.orbits.size(), 0);
      CHECK(zero_a == zero_class);
    }
  }
}

TEST_CASE("untwisting") {
  auto fd = fold(RootDatum::build("A3"), {2, 1, 0});
  CHECK(untwist_classify(fd, Rational(1, 2)) == UntwistClass::Untwisted);
  CHECK(untwist_classify(fd, Rational(1, 3)) == UntwistClass::Twisted);
  CHECK(untwist_classify(fd, Rational(-3, 4)) == UntwistClass::Untwisted);
  CHECK_THROWS_AS(untwist_classify(fd, Rational(0)), DomainError);
  auto id = fold(RootDatum::build("A3"), {0, 1, 2});
  for (long long q = 1; q <= 7; ++q) CHECK(untwist_classify(id, Rational(1, q)) == UntwistClass::Untwisted);
  CHECK(to_string(UntwistClass::Twisted) == "twisted");
}

}
