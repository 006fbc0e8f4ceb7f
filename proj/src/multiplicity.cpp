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

#include "endokl/multiplicity.hpp"

#include <algorithm>

namespace endokl {

RatVec highest_weight(const StratificationDatum& sd, const CoxeterElement& w) {
  RatVec v = sd.act(w, sd.lambda_prime);
  RatVec rho = sd.datum.rho();
  for (std::size_t k = 0; k < v.size(); ++k) v[k] -= rho[k];
  return v;
}

WeightKeyedMatrix weight_keyed(const MultiplicityMatrix& mm) {
  WeightKeyedMatrix out;
  std::vector<RatVec> hw;
  for (const auto& w : mm.labels) hw.push_back(highest_weight(mm.sd, w));
  for (std::size_t a = 0; a < hw.size(); ++a)
    for (std::size_t b = 0; b < hw.size(); ++b) out[{hw[a], hw[b]}] = mm.entries[a][b];
  return out;
}

MultiplicityEngine::MultiplicityEngine(const StratificationDatum& sd, std::shared_ptr<KLCache> cache)
    : sd_(sd),
      kl_(std::make_shared<const ElementTable>(sd.zeta_system), std::move(cache)),
      w0_(longest_element(sd.zeta_system, all_generators(sd.zeta_system))),
      w0J_(longest_element(sd.zeta_system, sd.J)) {}

long long MultiplicityEngine::verma_multiplicity(const CoxeterElement& w, const CoxeterElement& y) {
  sd_.label_index(w);
  sd_.label_index(y);
  return kl_.total_dimension(w0_ * y * w0J_, w0_ * w * w0J_);
}

MultiplicityMatrix MultiplicityEngine::matrix(unsigned threads) {
  if (threads > 1) kl_.compute_all(threads);
  MultiplicityMatrix mm{sd_, sd_.index_set, sd_.order, {}};
  const std::size_t n = mm.labels.size();
  mm.entries.assign(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mm.entries[i][j] = verma_multiplicity(mm.labels[i], mm.labels[j]);
  return mm;
}

MultiplicityMatrix multiplicity_matrix(const StratificationDatum& sd, std::shared_ptr<KLCache> cache,
                                       unsigned threads) {
  MultiplicityEngine eng(sd, std::move(cache));
  return eng.matrix(threads);
}

IntMatrix simple_in_verma_inversion(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("matrix is not square");
    if (m[i][i] != 1) throw DomainError("matrix is not unitriangular");
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != 0) throw DomainError("matrix is not upper triangular");
  }
  IntMatrix x(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    x[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      long long s = 0;
      for (std::size_t k = i; k < j; ++k) s += x[i][k] * m[k][j];
      x[i][j] = -s;
    }
  }
  return x;
}

GradedCharacter costalk_character(const RootDatum& datum, int degree_bound) {
  if (degree_bound < 0) throw DomainError("degree bound must be nonnegative");
  std::vector<IntVec> cone = cone_vectors(datum.rank(), degree_bound);
  GradedCharacter table;
  for (const auto& a : cone) table[a] = Poly{};
  table[IntVec(datum.rank(), 0)] = Poly{1};
  for (const Root& beta : datum.positive_roots()) {
    for (const auto& a : cone) {
      IntVec rest = a;
      bool inside = true;
      for (std::size_t k = 0; k < rest.size(); ++k) {
        rest[k] -= beta.coroot[k];
        inside = inside && rest[k] >= 0;
      }
      if (!inside) continue;
      const Poly& src = table[rest];
      Poly& dst = table[a];
      if (dst.size() < src.size() + 1) dst.resize(src.size() + 1, 0);
      for (std::size_t k = 0; k < src.size(); ++k) dst[k + 1] += src[k];
    }
  }
  return table;
}

Poly kostant_q(const RootDatum& datum, const IntVec& alpha) {
  if (static_cast<int>(alpha.size()) != datum.rank()) throw DomainError("degree has wrong rank");
  for (auto c : alpha)
    if (c < 0) return Poly{};
  GradedCharacter t = costalk_character(datum, static_cast<int>(height(alpha)));
  return t.at(alpha);
}

long long weyl_dimension(const RootDatum& datum, const RatVec& hw) {
  if (static_cast<int>(hw.size()) != datum.rank()) throw DomainError("weight has wrong rank");
  for (int i = 0; i < datum.rank(); ++i) {
    Rational p = datum.pairing(hw, datum.simple(i).root);
    if (p.denominator() != 1 || p < 0)
      throw DomainError("highest weight " + format_vector(hw) + " is not dominant integral");
  }
  RatVec rho = datum.rho();
  RatVec shifted = hw;
  for (std::size_t k = 0; k < hw.size(); ++k) shifted[k] += rho[k];
  Rational dim = 1;
  for (const Root& b : datum.positive_roots())
    dim *= datum.pairing(shifted, b.root) / datum.pairing(rho, b.root);
  return dim.numerator();
}

std::map<IntVec, long long> simple_character(const MultiplicityMatrix& mm, int label_index,
                                             int depth) {
  const auto& sd = mm.sd;
  IntMatrix inv = simple_in_verma_inversion(mm.entries);
  GradedCharacter kostant = costalk_character(sd.datum, depth);
  const RatVec top = sd.act(mm.labels[label_index], sd.lambda_prime);
  std::map<IntVec, long long> out;
  for (std::size_t w = 0; w < mm.labels.size(); ++w) {
    const long long c = inv[label_index][w];
    if (c == 0) continue;
    RatVec hw = sd.act(mm.labels[w], sd.lambda_prime);
    RatVec d(hw.size());
    for (std::size_t k = 0; k < hw.size(); ++k) d[k] = top[k] - hw[k];
    IntVec shift = to_integral(d);
    for (const auto& [alpha, poly] : kostant) {
      IntVec a = alpha;
      for (std::size_t k = 0; k < a.size(); ++k) a[k] += shift[k];
      if (height(a) > depth) continue;
      out[a] += c * evaluate_at_one(poly);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace endokl
