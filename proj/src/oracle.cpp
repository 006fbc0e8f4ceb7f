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

#include "endokl/oracle.hpp"

#include "endokl/coxeter.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace endokl {

namespace {

BigRational big(const Rational& r) { return BigRational(r.numerator()) / r.denominator(); }

// Row-reduces in place and returns the pivot columns.
std::vector<int> rref(BigMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    BigRational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int k = 0; k < rows; ++k) {
      if (k == r || m[k][c] == 0) continue;
      BigRational f = m[k][c];
      for (int j = c; j < cols; ++j) m[k][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

bool in_cone(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x >= 0; });
}

IntVec shifted(IntVec v, int i, long long by) {
  v[i] += by;
  return v;
}

}  // namespace

VermaStructure::VermaStructure(const RootDatum& datum, int depth) : datum_(datum), depth_(depth) {
  if (datum.rank() > 2) throw DomainError("the Verma oracle supports rank at most 2");
  if (depth < 0) throw DomainError("oracle depth must be nonnegative");
  order_ = cone_vectors(datum.rank(), depth);
  RatVec generic(datum.rank());
  for (int k = 0; k < datum.rank(); ++k) generic[k] = Rational(1, k == 0 ? 1009 : 1013);
  std::map<IntVec, std::vector<BigMatrix>> e;
  for (const auto& alpha : order_) extend(alpha, generic, e);
}

int VermaStructure::dim(const IntVec& alpha) const {
  const Level* l = level(alpha);
  return l ? l->dim : 0;
}

const VermaStructure::Level* VermaStructure::level(const IntVec& alpha) const {
  auto it = levels_.find(alpha);
  return it == levels_.end() ? nullptr : &it->second;
}

std::vector<std::vector<BigRational>> VermaStructure::raise_candidate(
    const IntVec& alpha, int j, int b, const RatVec& hw,
    const std::map<IntVec, std::vector<BigMatrix>>& e) const {
  const int n = datum_.rank();
  const IntVec from = shifted(alpha, j, -1);
  std::vector<std::vector<BigRational>> out(n);
  for (int i = 0; i < n; ++i) {
    const IntVec target = shifted(alpha, i, -1);
    if (!in_cone(target)) continue;
    out[i].assign(dim(target), BigRational(0));
    // e_i f_j b = f_j e_i b + [i = j] h_i b.
    const IntVec below = shifted(from, i, -1);
    if (in_cone(below)) {
      const BigMatrix& ei = e.at(from)[i];
      const BigMatrix& fj = level(target)->f[j];
      for (std::size_t r = 0; r < fj.size(); ++r)
        for (std::size_t c = 0; c < ei.size(); ++c)
          if (ei[c][b] != 0) out[i][r] += fj[r][c] * ei[c][b];
    }
    if (i == j) {
      BigRational h = 0;
      for (int k = 0; k < n; ++k) h += (big(hw[k]) - from[k]) * datum_.cartan()[k][i];
      out[i][b] += h;
    }
  }
  return out;
}

void VermaStructure::extend(const IntVec& alpha, const RatVec& generic,
                            std::map<IntVec, std::vector<BigMatrix>>& e) {
  const int n = datum_.rank();
  Level lvl;
  lvl.f.resize(n);
  if (height(alpha) == 0) {
    lvl.dim = 1;
    lvl.src = {{-1, -1}};
    levels_[alpha] = lvl;
    e[alpha] = std::vector<BigMatrix>(n);
    return;
  }
  std::vector<std::pair<int, int>> cands;
  std::vector<std::vector<std::vector<BigRational>>> images;
  for (int j = 0; j < n; ++j) {
    const IntVec from = shifted(alpha, j, -1);
    if (!in_cone(from)) continue;
    for (int b = 0; b < dim(from); ++b) {
      cands.emplace_back(j, b);
      images.push_back(raise_candidate(alpha, j, b, generic, e));
    }
  }
  // Columns: candidate images stacked over i.
  BigMatrix g;
  for (int i = 0; i < n; ++i) {
    const std::size_t rows = images.empty() ? 0 : images[0][i].size();
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<BigRational> row;
      for (const auto& img : images) row.push_back(img[i][r]);
      g.push_back(std::move(row));
    }
  }
  std::vector<int> pivots = rref(g);
  lvl.dim = static_cast<int>(pivots.size());
  for (int p : pivots) lvl.src.push_back(cands[p]);
  for (int j = 0; j < n; ++j) {
    const IntVec from = shifted(alpha, j, -1);
    if (in_cone(from)) lvl.f[j].assign(lvl.dim, std::vector<BigRational>(dim(from), BigRational(0)));
  }
  for (std::size_t c = 0; c < cands.size(); ++c)
    for (int r = 0; r < lvl.dim; ++r) lvl.f[cands[c].first][r][cands[c].second] = g[r][c];
  levels_[alpha] = lvl;

  std::vector<BigMatrix> ea(n);
  for (int i = 0; i < n; ++i) {
    const IntVec target = shifted(alpha, i, -1);
    if (!in_cone(target)) continue;
    ea[i].assign(dim(target), std::vector<BigRational>(lvl.dim));
    for (int k = 0; k < lvl.dim; ++k)
      for (int r = 0; r < dim(target); ++r) ea[i][r][k] = images[pivots[k]][i][r];
  }
  e[alpha] = std::move(ea);
}

std::map<IntVec, std::vector<BigMatrix>> VermaStructure::raising(const RatVec& hw) const {
  const int n = datum_.rank();
  if (static_cast<int>(hw.size()) != n) throw DomainError("highest weight has wrong rank");
  std::map<IntVec, std::vector<BigMatrix>> e;
  for (const auto& alpha : order_) {
    const Level& lvl = levels_.at(alpha);
    std::vector<BigMatrix> ea(n);
    if (height(alpha) > 0) {
      for (int i = 0; i < n; ++i) {
        const IntVec target = shifted(alpha, i, -1);
        if (in_cone(target)) ea[i].assign(dim(target), std::vector<BigRational>(lvl.dim));
      }
      for (int k = 0; k < lvl.dim; ++k) {
        auto img = raise_candidate(alpha, lvl.src[k].first, lvl.src[k].second, hw, e);
        for (int i = 0; i < n; ++i)
          for (std::size_t r = 0; r < img[i].size(); ++r) ea[i][r][k] = img[i][r];
      }
    }
    e[alpha] = std::move(ea);
  }
  return e;
}

VermaModel::VermaModel(std::shared_ptr<const VermaStructure> structure, RatVec hw)
    : structure_(std::move(structure)), hw_(std::move(hw)) {
  e_ = structure_->raising(hw_);
  const int n = structure_->datum().rank();
  // A[alpha] has kernel equal to the maximal submodule at depth alpha.
  std::map<IntVec, BigMatrix> a;
  for (const auto& alpha : structure_->depths()) {
    const int d = structure_->dim(alpha);
    BigMatrix stacked;
    if (height(alpha) == 0) {
      stacked = {{BigRational(1)}};
    } else {
      for (int i = 0; i < n; ++i) {
        const IntVec target = shifted(alpha, i, -1);
        if (!in_cone(target)) continue;
        const BigMatrix& lower = a.at(target);
        const BigMatrix& ei = e_.at(alpha)[i];
        for (const auto& row : lower) {
          std::vector<BigRational> out(d, BigRational(0));
          for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] == 0) continue;
            for (int k = 0; k < d; ++k) out[k] += row[c] * ei[c][k];
          }
          stacked.push_back(std::move(out));
        }
      }
    }
    rref(stacked);
    simple_[alpha] = static_cast<int>(stacked.size());
    a[alpha] = std::move(stacked);
  }
}

int VermaModel::simple_dim(const IntVec& alpha) const {
  auto it = simple_.find(alpha);
  if (it == simple_.end()) {
    if (!in_cone(alpha)) return 0;
    throw DomainError("depth " + format_vector(alpha) + " exceeds the constructed bound " +
                      std::to_string(depth()));
  }
  return it->second;
}

int VermaModel::singular_dim(const IntVec& alpha) const {
  const int d = weight_dim(alpha);
  if (!in_cone(alpha)) return 0;
  if (height(alpha) > depth())
    throw DomainError("depth " + format_vector(alpha) + " exceeds the constructed bound " +
                      std::to_string(depth()));
  if (height(alpha) == 0) return 1;
  BigMatrix stacked;
  for (const auto& ei : e_.at(alpha))
    for (const auto& row : ei) stacked.push_back(row);
  return d - static_cast<int>(rref(stacked).size());
}

std::vector<std::pair<IntVec, int>> singular_vectors(const VermaModel& vm, int depth) {
  if (depth > vm.depth())
    throw DomainError("requested depth " + std::to_string(depth) + " exceeds the constructed bound " +
                      std::to_string(vm.depth()));
  std::vector<std::pair<IntVec, int>> out;
  for (const auto& alpha : cone_vectors(static_cast<int>(vm.highest_weight().size()), depth)) {
    if (height(alpha) == 0) continue;
    int s = vm.singular_dim(alpha);
    if (s > 0) out.emplace_back(alpha, s);
  }
  return out;
}

namespace {

std::vector<RatVec> linkage_weights(const RootDatum& datum, const RationalCoweight& lambda) {
  const RatVec lam = lambda.value();
  std::set<RatVec> seen;
  for (const auto& w : enumerate_elements(CoxeterSystem::weyl(datum))) {
    RatVec v = lam;
    const auto& word = w.word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = datum.reflect(*it, std::move(v));
    bool integral = true;
    for (std::size_t k = 0; k < v.size(); ++k) integral = integral && (lam[k] - v[k]).denominator() == 1;
    if (integral) seen.insert(v);
  }
  const RatVec rho = datum.rho();
  std::vector<RatVec> out;
  for (RatVec v : seen) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= rho[k];
    out.push_back(v);
  }
  auto sum = [](const RatVec& v) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    return s;
  };
  std::sort(out.begin(), out.end(), [&](const RatVec& a, const RatVec& b) {
    Rational sa = sum(a), sb = sum(b);
    if (sa != sb) return sa > sb;
    return a > b;
  });
  return out;
}

// a - b when it lies in the positive cone.
std::optional<IntVec> depth_between(const RatVec& a, const RatVec& b) {
  IntVec d(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    Rational x = a[k] - b[k];
    if (x.denominator() != 1 || x < 0) return std::nullopt;
    d[k] = x.numerator();
  }
  return d;
}

}  // namespace

WeightKeyedMatrix weight_keyed(const OracleMatrix& om) {
  WeightKeyedMatrix out;
  for (std::size_t a = 0; a < om.weights.size(); ++a)
    for (std::size_t b = 0; b < om.weights.size(); ++b)
      out[{om.weights[a], om.weights[b]}] = om.entries[a][b];
  return out;
}

int oracle_required_depth(const RootDatum& datum, const RationalCoweight& lambda) {
  auto weights = linkage_weights(datum, lambda);
  long long mx = 0;
  for (const auto& a : weights)
    for (const auto& b : weights)
      if (auto d = depth_between(a, b)) mx = std::max(mx, height(*d));
  return static_cast<int>(mx) + 2;
}

OracleMatrix oracle_multiplicity_matrix(const RootDatum& datum, const RationalCoweight& lambda,
                                        int depth) {
  if (datum.rank() > 2) throw DomainError("the Verma oracle supports rank at most 2");
  if (static_cast<int>(lambda.mu.size()) != datum.rank())
    throw DomainError("coweight has wrong number of entries");
  const int required = oracle_required_depth(datum, lambda);
  if (depth == 0) depth = required;
  if (depth < required)
    throw DomainError("oracle depth " + std::to_string(depth) + " is too small; need " +
                      std::to_string(required));
  OracleMatrix om;
  om.depth = depth;
  om.weights = linkage_weights(datum, lambda);
  auto structure = std::make_shared<const VermaStructure>(datum, depth);
  std::vector<VermaModel> models;
  for (const auto& w : om.weights) models.emplace_back(structure, w);
  const std::size_t m = om.weights.size();
  om.entries.assign(m, IntVec(m, 0));
  for (std::size_t a = 0; a < m; ++a) {
    std::map<IntVec, long long> rest;
    for (const auto& alpha : structure->depths()) rest[alpha] = structure->dim(alpha);
    std::vector<std::pair<IntVec, std::size_t>> below;
    for (std::size_t b = 0; b < m; ++b)
      if (auto d = depth_between(om.weights[a], om.weights[b])) below.emplace_back(*d, b);
    std::stable_sort(below.begin(), below.end(),
                     [](const auto& x, const auto& y) { return height(x.first) < height(y.first); });
    for (const auto& [d, b] : below) {
      const long long c = rest[d];
      if (c < 0) throw DomainError("character peeling produced a negative multiplicity");
      om.entries[a][b] = c;
      if (c == 0) continue;
      for (const auto& gamma : structure->depths()) {
        if (height(gamma) + height(d) > depth) continue;
        IntVec at = gamma;
        for (std::size_t k = 0; k < at.size(); ++k) at[k] += d[k];
        rest[at] -= c * models[b].simple_dim(gamma);
      }
    }
    for (const auto& [alpha, r] : rest)
      if (r != 0)
        throw DomainError("character peeling left a remainder at depth " + format_vector(alpha));
  }
  return om;
}

}  // namespace endokl
