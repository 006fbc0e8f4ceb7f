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

#include "endokl/folding.hpp"

#include <algorithm>
#include <numeric>

namespace endokl {

namespace {

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.size(), IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[j][i] = m[i][j];
  return t;
}

// Classical names for the invariant and dual sides.
std::pair<std::string, std::string> folded_names(const FoldingDatum& fd) {
  const char f = fd.source.family();
  const int r = fd.source.rank();
  const int n = static_cast<int>(fd.orbits.size());
  if (fd.d == 1) return {fd.source.name(), fd.source.name()};
  if (f == 'A' && fd.d == 2 && r % 2 == 1)
    return {"C" + std::to_string(n), "B" + std::to_string(n)};
  if (f == 'D' && fd.d == 2) return {"B" + std::to_string(n), "C" + std::to_string(n)};
  if (f == 'D' && r == 4 && fd.d == 3) return {"G2", "G2"};
  if (f == 'E' && r == 6 && fd.d == 2) return {"F4", "F4"};
  return {identify_cartan_type(fd.invariant_cartan), identify_cartan_type(fd.dual_cartan)};
}

}  // namespace

FoldingDatum fold(const RootDatum& source, const std::vector<int>& sigma) {
  const int r = source.rank();
  const IntMatrix& a = source.cartan();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && a[i][j] != 0 && a[i][j] != -1)
        throw DomainError("folding needs a simply-laced source, " + source.name() + " is not");
  if (static_cast<int>(sigma.size()) != r)
    throw DomainError("sigma has " + std::to_string(sigma.size()) + " entries, rank is " +
                      std::to_string(r));
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < r; ++i)
    if (sorted[i] != i) throw DomainError("sigma is not a permutation of the nodes");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (a[sigma[i]][sigma[j]] != a[i][j])
        throw DomainError("sigma does not preserve the Cartan matrix of " + source.name());

  FoldingDatum fd{source, sigma, 1, {}, std::vector<int>(r, -1), {}, {}, {}, {}, {}, false, {}, {}};
  for (int i = 0; i < r; ++i) {
    if (fd.orbit_of[i] >= 0) continue;
    std::vector<int> orbit;
    for (int j = i; fd.orbit_of[j] < 0; j = sigma[j]) {
      fd.orbit_of[j] = static_cast<int>(fd.orbits.size());
      orbit.push_back(j);
    }
    std::sort(orbit.begin(), orbit.end());
    fd.d = std::lcm(fd.d, static_cast<int>(orbit.size()));
    fd.d_i.push_back(static_cast<int>(orbit.size()));
    fd.orbits.push_back(orbit);
  }
  const int n = static_cast<int>(fd.orbits.size());
  fd.invariant_cartan.assign(n, IntVec(n, 0));
  for (int I = 0; I < n; ++I)
    for (int J = 0; J < n; ++J)
      for (int i : fd.orbits[I]) fd.invariant_cartan[I][J] += a[i][fd.orbits[J].front()];
  fd.dual_cartan = transpose(fd.invariant_cartan);
  for (int I = 0; I < n; ++I)
    if (fd.invariant_cartan[I][I] != 2) fd.twisted = true;
  if (fd.twisted) {
    fd.invariant_type = "twisted " + source.name();
    fd.dual_type = fd.invariant_type;
    return fd;
  }
  std::tie(fd.invariant_type, fd.dual_type) = folded_names(fd);
  fd.invariant = RootDatum::from_cartan(fd.invariant_cartan, fd.invariant_type);
  fd.dual = RootDatum::from_cartan(fd.dual_cartan, fd.dual_type);
  return fd;
}

IntVec sigma_act(const FoldingDatum& fd, const IntVec& x) {
  if (x.size() != fd.sigma.size()) throw DomainError("coweight has the wrong number of entries");
  IntVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[fd.sigma[i]] = x[i];
  return out;
}

IntVec coinvariant_map_a(const FoldingDatum& fd, const IntVec& alpha) {
  IntVec sum(alpha.size(), 0);
  IntVec cur = alpha;
  for (int k = 0; k < fd.d; ++k) {
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += cur[i];
    cur = sigma_act(fd, cur);
  }
  return sum;
}

IntVec coinvariant_class(const FoldingDatum& fd, const IntVec& alpha) {
  if (alpha.size() != fd.sigma.size()) throw DomainError("coweight has the wrong number of entries");
  IntVec out(fd.orbits.size(), 0);
  for (std::size_t i = 0; i < alpha.size(); ++i) out[fd.orbit_of[i]] += alpha[i];
  return out;
}

std::string to_string(UntwistClass c) {
  return c == UntwistClass::Untwisted ? "untwisted" : "twisted";
}

UntwistClass untwist_classify(const FoldingDatum& fd, const Rational& k) {
  if (k == 0) throw DomainError("untwisting needs a non-critical level k != 0");
  return k.denominator() % fd.d == 0 ? UntwistClass::Untwisted : UntwistClass::Twisted;
}

}  // namespace endokl
