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

#include "endokl/endoscopy.hpp"

#include <algorithm>
#include <set>

namespace endokl {

namespace {

IntVec negate(IntVec v) {
  for (auto& x : v) x = -x;
  return v;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

// Root reflection beta -> beta - <gamma^vee, beta> gamma.
IntVec reflect_root(const RootDatum& d, const Root& gamma, const IntVec& beta) {
  long long p = d.pairing(gamma.coroot, beta);
  IntVec out = beta;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= p * gamma.root[k];
  return out;
}

// Element of W carrying rho to v (v regular).
CoxeterElement weyl_element_of(const RootDatum& d, const SystemPtr& weyl, RatVec v) {
  std::vector<int> word;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < d.rank(); ++i)
      if (d.pairing(v, d.simple(i).root) < 0) {
        v = d.reflect(i, std::move(v));
        word.push_back(i);
        moved = true;
        break;
      }
  }
  return CoxeterElement::from_word(weyl, word);
}

}  // namespace

RatVec weyl_act(const RootDatum& datum, const CoxeterElement& w, RatVec v) {
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = datum.reflect(*it, std::move(v));
  return v;
}

IntVec to_integral(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.denominator() != 1) throw DomainError("vector " + format_vector(v) + " is not integral");
    out.push_back(x.numerator());
  }
  return out;
}

std::vector<Root> integrality_subsystem(const RootDatum& datum, const RatVec& lambda) {
  if (static_cast<int>(lambda.size()) != datum.rank())
    throw DomainError("coweight has " + std::to_string(lambda.size()) + " entries, rank is " +
                      std::to_string(datum.rank()));
  std::vector<Root> out;
  for (const Root& r : datum.positive_roots())
    if (datum.pairing(lambda, r.root).denominator() == 1) out.push_back(r);
  return out;
}

std::vector<Root> integrality_subsystem(const RootDatum& datum, const RationalCoweight& lambda) {
  return integrality_subsystem(datum, lambda.value());
}

std::vector<Root> simple_system(const RootDatum& datum, const std::vector<Root>& subsystem) {
  std::set<IntVec> members;
  for (const Root& r : subsystem) members.insert(r.root);
  for (const Root& g : subsystem)
    for (const Root& b : subsystem) {
      IntVec s = reflect_root(datum, g, b.root);
      if (!members.count(s) && !members.count(negate(s)))
        throw DomainError("root subset is not closed under its reflections");
    }
  std::vector<Root> out;
  for (const Root& r : subsystem) {
    bool decomposable = false;
    for (std::size_t a = 0; a < subsystem.size() && !decomposable; ++a)
      for (std::size_t b = a; b < subsystem.size() && !decomposable; ++b)
        decomposable = add(subsystem[a].root, subsystem[b].root) == r.root;
    if (!decomposable) out.push_back(r);
  }
  return out;
}

std::vector<CoxeterElement> integral_stabilizer_brute(const RootDatum& datum, const RatVec& lambda,
                                                      SystemPtr weyl) {
  if (!weyl) weyl = CoxeterSystem::weyl(datum);
  std::vector<CoxeterElement> out;
  for (const auto& w : enumerate_elements(weyl)) {
    RatVec wl = weyl_act(datum, w, lambda);
    bool integral = true;
    for (std::size_t k = 0; k < wl.size(); ++k)
      integral = integral && (lambda[k] - wl[k]).denominator() == 1;
    if (integral) out.push_back(w);
  }
  return out;
}

RatVec StratificationDatum::act(const CoxeterElement& w, RatVec v) const {
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    v = datum.reflect(simples[*it], std::move(v));
  return v;
}

CoxeterElement StratificationDatum::to_weyl(const CoxeterElement& w) const {
  return weyl_element_of(datum, weyl, act(w, datum.rho()));
}

int StratificationDatum::label_index(const CoxeterElement& w) const {
  auto it = std::find(index_set.begin(), index_set.end(), w);
  if (it == index_set.end()) throw DomainError("label " + w.to_string() + " is not a stratum");
  return static_cast<int>(it - index_set.begin());
}

StratificationDatum stratification_datum(const RootDatum& datum, const RationalCoweight& lambda) {
  if (static_cast<int>(lambda.mu.size()) != datum.rank())
    throw DomainError("coweight has " + std::to_string(lambda.mu.size()) + " entries, rank is " +
                      std::to_string(datum.rank()));
  StratificationDatum sd{datum, lambda, CoxeterSystem::weyl(datum), {}, {}, nullptr, {}, {}, {},
                         {}, {}};
  const RatVec value = lambda.value();
  sd.integral_roots = integrality_subsystem(datum, value);
  sd.simples = simple_system(datum, sd.integral_roots);
  const int k = static_cast<int>(sd.simples.size());
  IntMatrix cartan(k, IntVec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      cartan[i][j] = datum.pairing(sd.simples[i].coroot, sd.simples[j].root);
  std::vector<int> labels(k);
  for (int i = 0; i < k; ++i) labels[i] = i + 1;
  sd.zeta_system =
      CoxeterSystem::create(cartan, identify_cartan_type(cartan), CoxeterSystem::Kind::Finite, labels);

  // Climb to the dominant conjugate; lambda = s_{i1} ... s_{im} lambda'.
  RatVec v = value;
  std::vector<int> word;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < k; ++i)
      if (datum.pairing(v, sd.simples[i].root) < 0) {
        v = datum.reflect(sd.simples[i], std::move(v));
        word.push_back(i);
        moved = true;
        break;
      }
  }
  sd.lambda_prime = v;
  for (int i = 0; i < k; ++i)
    if (datum.pairing(v, sd.simples[i].root) == 0) sd.J.push_back(i);
  sd.y = min_coset_rep(CoxeterElement::from_word(sd.zeta_system, word), sd.J);
  sd.index_set = parabolic_quotient(sd.zeta_system, sd.J);
  std::sort(sd.index_set.begin(), sd.index_set.end());
  const std::size_t m = sd.index_set.size();
  sd.order.assign(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) sd.order[a][b] = bruhat_leq(sd.index_set[a], sd.index_set[b]);
  return sd;
}

std::vector<CoxeterElement> strata_for_degree(const StratificationDatum& sd, const IntVec& alpha) {
  if (static_cast<int>(alpha.size()) != sd.datum.rank())
    throw DomainError("degree has wrong number of entries");
  for (auto c : alpha)
    if (c < 0) throw DomainError("degree " + format_vector(alpha) + " is outside the positive cone");
  std::vector<CoxeterElement> out;
  for (const auto& w : sd.index_set) {
    RatVec wl = sd.act(w, sd.lambda_prime);
    RatVec diff(wl.size());
    for (std::size_t k = 0; k < wl.size(); ++k) diff[k] = sd.lambda_prime[k] - wl[k];
    if (RootDatum::dominance_leq(to_integral(diff), alpha)) out.push_back(w);
  }
  return out;
}

}  // namespace endokl
