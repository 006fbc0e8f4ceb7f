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
#include "endokl/affine.hpp"

#include <algorithm>
#include <set>

using namespace endokl;

namespace {

std::vector<std::string> words(const std::vector<CoxeterElement>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

AffineStratificationDatum a1(long long mu, long long a, long long b) {
  return affine_endoscopy(RootDatum::build("A1"), AffineCoweight{{mu}, a, b});
}

}  // namespace

TEST_SUITE("affine") {

TEST_CASE("level classes") {
  CHECK(classify_level({{0}, 1, -3}) == LevelClass::Positive);
  CHECK(classify_level({{0}, -1, 3}) == LevelClass::Positive);
  CHECK(classify_level({{0}, 1, 3}) == LevelClass::Negative);
  CHECK(classify_level({{0}, 2, 0}) == LevelClass::Critical);
  CHECK_THROWS_AS(classify_level({{0}, 0, 1}), DomainError);
  CHECK_THROWS_AS(classify_level({{0}, 0, 0}), DomainError);
  CHECK(AffineCoweight{{1}, 2, -6}.level() == Rational(3));
  CHECK(to_string(LevelClass::Negative) == "negative");
}

TEST_CASE("regular integral positive level in affine A1") {
  auto sd = a1(1, 2, -6);
  CHECK(sd.zeta_system->name() == "A1~");
  CHECK(sd.J.empty());
  CHECK(sd.y.is_identity());
  CHECK(words(affine_strata_index(sd, {0, 1})) == std::vector<std::string>{"e", "1"});
  CHECK(words(affine_strata_index(sd, {2, 0})) == std::vector<std::string>{"e", "0"});
  CHECK(sd.difference(CoxeterElement::parse(sd.zeta_system, "0")) == IntVec{2, 0});
  CHECK_THROWS_AS(affine_strata_index(sd, {1}), DomainError);
}

TEST_CASE("loop inversion exchanges positive and negative level") {
  RootDatum a2 = RootDatum::build("A2");
  for (const IntVec& mu : {IntVec{1, 1}, IntVec{2, 0}, IntVec{1, 2}}) {
    auto pos = affine_endoscopy(a2, {mu, 3, -6});
    auto neg = affine_endoscopy(a2, {IntVec{-mu[0], -mu[1]}, 3, 6});
    CHECK(pos.level == LevelClass::Positive);
    CHECK(neg.level == LevelClass::Negative);
    for (const IntVec& bound : {IntVec{1, 1, 1}, IntVec{2, 3, 1}, IntVec{3, 3, 3}})
      CHECK(words(affine_strata_index(pos, bound)) == words(affine_strata_index(neg, bound)));
  }
}

TEST_CASE("strata grow with the bound") {
  auto sd = affine_endoscopy(RootDatum::build("A2"), {{1, 1}, 1, -4});
  std::vector<std::string> prev;
  for (long long c = 0; c <= 4; ++c) {
    auto cur = words(affine_strata_index(sd, {c, c, c}));
    std::set<std::string> s(cur.begin(), cur.end());
    for (const auto& w : prev) CHECK(s.count(w) == 1);
    CHECK(cur.size() >= prev.size());
    prev = cur;
  }
  CHECK(prev.size() > 10);
}

TEST_CASE("parabolic K keeps the projection image") {
  auto sd = affine_endoscopy(RootDatum::build("A2"), {{1, 1}, 1, -4});
  const std::vector<int> K{1};
  auto all = affine_strata_index(sd, {3, 3, 3});
  auto filtered = affine_strata_index(sd, {3, 3, 3}, K);
  std::set<std::string> image;
  for (const auto& w : all) image.insert(min_double_coset_rep(w, K, sd.J).to_string());
  auto fw = words(filtered);
  CHECK(std::set<std::string>(fw.begin(), fw.end()) == image);
  CHECK(filtered.size() < all.size());
}

TEST_CASE("enumeration beyond the length guard is rejected") {
  auto sd = a1(1, 2, -6);
  CHECK_THROWS_AS(affine_strata_index(sd, {50, 50}, {}, 6), DomainError);
  CHECK(affine_strata_index(sd, {50, 50}).size() > 10);
}

TEST_CASE("rational level gives a nonstandard affine system") {
  auto sd = a1(0, 2, -1);  // level 1/2
  CHECK(sd.period == 2);
  REQUIRE(sd.simples.size() == 2);
  CHECK(sd.simples[0] == AffineRoot{{1}, 0});
  CHECK(sd.simples[1] == AffineRoot{{-1}, 2});
  CHECK(sd.zeta_system->kind() == CoxeterSystem::Kind::Affine);
  CHECK(sd.zeta_system->coxeter_matrix()[0][1] == 0);
}

TEST_CASE("half-integral simple pairings") {
  // <lambda, alpha_1> = <lambda, alpha_2> = 1/2: only the theta direction is integral.
  auto sd = affine_endoscopy(RootDatum::build("A2"), {{1, 1}, 2, -6});
  REQUIRE(sd.simples.size() == 2);
  CHECK(sd.simples[0] == AffineRoot{{1, 1}, 0});
  CHECK(sd.simples[1] == AffineRoot{{-1, -1}, 1});
  // Level 1/2: alpha_i + m delta needs odd m, theta + m delta even m.
  auto half = affine_endoscopy(RootDatum::build("A2"), {{1, 1}, 2, -1});
  const auto& gcm = half.zeta_system->cartan();
  for (std::size_t i = 0; i < gcm.size(); ++i)
    for (std::size_t j = 0; j < gcm.size(); ++j)
      if (i != j) CHECK(gcm[i][j] <= 0);
  for (const auto& s : half.simples) {
    long long h = s.root[0] + s.root[1];
    CHECK((h + 3 * s.m) % 2 == 0);
  }
  // Half-integral simple pairings in affine A1 leave no integral root.
  CHECK(a1(1, 4, -4).simples.empty());
}

TEST_CASE("singular positive level") {
  // <lambda, alpha_0> = 0.
  auto sd = a1(1, 2, -2);
  CHECK(sd.J == std::vector<int>{0});
  auto labels = affine_strata_index(sd, {3, 3});
  for (const auto& w : labels) CHECK(!w.is_right_descent(0));
}

TEST_CASE("critical level pairs") {
  auto sd = a1(1, 2, 0);
  REQUIRE(sd.finite);
  CHECK_THROWS_AS(affine_strata_index(sd, {1, 1}), DomainError);
  auto delta = critical_strata_index(sd, {0}, 2);
  REQUIRE(delta.size() == 1);
  CHECK(delta[0].w.is_identity());
  CHECK(delta[0].alpha == IntVec{2});
  auto alpha = critical_strata_index(sd, {1}, 0);
  REQUIRE(alpha.size() == 1);
  CHECK(alpha[0].w.to_string() == "1");
  CHECK(alpha[0].alpha == IntVec{0});
  CHECK(critical_strata_index(sd, {0}, -1).empty());
  auto a2 = affine_endoscopy(RootDatum::build("A2"), {{1, 1}, 1, 0});
  // (alpha, rho) = 1 for both simple coroots.
  CHECK(critical_strata_index(a2, {0, 0}, 2).size() == 3);
}

TEST_CASE("translations") {
  RootDatum a1d = RootDatum::build("A1");
  SystemPtr sys = CoxeterSystem::affine_weyl(a1d);
  CHECK(translation_element(sys, a1d, {1}).to_string() == "0,1");
  CHECK(translation_element(sys, a1d, {0}).is_identity());
  for (const char* type : {"A1", "A2", "B2"}) {
    RootDatum d = RootDatum::build(type);
    SystemPtr s = CoxeterSystem::affine_weyl(d);
    for (const IntVec& mu : cone_vectors(d.rank(), 3)) {
      for (int sign : {1, -1}) {
        IntVec m = mu;
        for (auto& c : m) c *= sign;
        auto t = translation_element(s, d, m);
        auto dec = decompose(d, t);
        CHECK(dec.translation == m);
        CHECK(dec.finite.is_identity());
        long long expected = 0;
        for (const Root& b : d.positive_roots()) expected += std::abs(d.pairing(m, b.root));
        CHECK(t.length() == expected);
      }
    }
  }
  CHECK_THROWS_AS(translation_element(CoxeterSystem::weyl(a1d), a1d, {1}), DomainError);
}

TEST_CASE("geometric length agrees with word length") {
  for (const char* type : {"A1", "A2"}) {
    RootDatum d = RootDatum::build(type);
    for (const auto& w : affine_elements_up_to(CoxeterSystem::affine_weyl(d), 8))
      CHECK(geometric_length(d, w) == w.length());
  }
}

TEST_CASE("affine stalk dimensions") {
  auto pos = a1(1, 2, -6);
  auto labels = affine_strata_index(pos, {3, 3});
  auto m = affine_multiplicities(pos, labels);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      CHECK(m[i][j] == (bruhat_leq(labels[i], labels[j]) ? 1 : 0));
  auto neg = a1(-1, 2, 6);
  auto nl = affine_strata_index(neg, {3, 3});
  auto n = affine_multiplicities(neg, nl);
  for (std::size_t i = 0; i < nl.size(); ++i)
    for (std::size_t j = 0; j < nl.size(); ++j)
      CHECK(n[i][j] == (bruhat_leq(nl[j], nl[i]) ? 1 : 0));
  CHECK_THROWS_AS(affine_multiplicities(a1(1, 2, 0), {}), DomainError);
}

}
