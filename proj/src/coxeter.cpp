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

#include "endokl/coxeter.hpp"

#include <algorithm>
#include <set>

namespace endokl {

namespace {

std::size_t hash_vec(const IntVec& v) {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int coxeter_order(long long product) {
  switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

}  // namespace

SystemPtr CoxeterSystem::create(IntMatrix gcm, std::string name, Kind kind,
                                std::vector<int> labels) {
  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  const int n = static_cast<int>(gcm.size());
  if (static_cast<int>(labels.size()) != n)
    throw DomainError("Coxeter system: label count does not match rank");
  if (!std::is_sorted(labels.begin(), labels.end()) ||
      std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw DomainError("Coxeter system: labels must be strictly increasing");
  sys->coxeter_.assign(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i) {
    if (gcm[i][i] != 2) throw DomainError("generalized Cartan matrix needs 2 on the diagonal");
    for (int j = 0; j < n; ++j)
      if (i != j) sys->coxeter_[i][j] = coxeter_order(gcm[i][j] * gcm[j][i]);
  }
  sys->gcm_ = std::move(gcm);
  sys->name_ = std::move(name);
  sys->cache_tag_ = sys->name_ + ":";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sys->cache_tag_ += std::to_string(sys->coxeter_[i][j]);
  sys->kind_ = kind;
  sys->labels_ = std::move(labels);
  return sys;
}

SystemPtr CoxeterSystem::weyl(const RootDatum& datum) {
  std::vector<int> labels(datum.rank());
  for (int i = 0; i < datum.rank(); ++i) labels[i] = i + 1;
  auto sys = std::const_pointer_cast<CoxeterSystem>(
      create(datum.cartan(), datum.name(), Kind::Finite, labels));
  sys->cache_tag_ = sys->name_;
  return sys;
}

SystemPtr CoxeterSystem::affine_weyl(const RootDatum& datum) {
  const int r = datum.rank();
  const Root& theta = datum.positive_roots()[datum.highest_root_index()];
  IntMatrix a(r + 1, IntVec(r + 1, 0));
  a[0][0] = 2;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) a[i + 1][j + 1] = datum.cartan()[i][j];
    IntVec e(r, 0);
    e[i] = 1;
    a[0][i + 1] = -datum.pairing(theta.coroot, datum.simple(i).root);
    a[i + 1][0] = -datum.pairing(e, theta.root);
  }
  std::vector<int> labels(r + 1);
  for (int i = 0; i <= r; ++i) labels[i] = i;
  auto sys = std::const_pointer_cast<CoxeterSystem>(
      create(std::move(a), datum.name() + "~", Kind::Affine, labels));
  sys->cache_tag_ = sys->name_;
  return sys;
}

int CoxeterSystem::generator_for_label(long long label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels_[i] == label) return i;
  throw ParseError("unknown generator label " + std::to_string(label) + " for " + name_);
}

void CoxeterSystem::act(int i, IntVec& x) const {
  const long long xi = x[i];
  if (xi == 0) return;
  for (int j = 0; j < rank(); ++j) x[j] -= gcm_[i][j] * xi;
}

CoxeterElement CoxeterElement::from_chamber(SystemPtr sys, IntVec chamber) {
  CoxeterElement w;
  w.sys_ = std::move(sys);
  w.chamber_ = std::move(chamber);
  IntVec v = w.chamber_;
  const int n = w.sys_->rank();
  while (true) {
    int i = 0;
    while (i < n && v[i] >= 0) ++i;
    if (i == n) break;
    w.word_.push_back(i);
    w.sys_->act(i, v);
  }
  w.inverse_chamber_.assign(n, 1);
  for (int letter : w.word_) w.sys_->act(letter, w.inverse_chamber_);
  return w;
}

CoxeterElement CoxeterElement::identity(SystemPtr sys) {
  IntVec x0(sys->rank(), 1);
  return from_chamber(std::move(sys), std::move(x0));
}

CoxeterElement CoxeterElement::generator(SystemPtr sys, int i) {
  return from_word(std::move(sys), {i});
}

CoxeterElement CoxeterElement::from_word(SystemPtr sys, const std::vector<int>& word) {
  IntVec v(sys->rank(), 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= sys->rank()) throw DomainError("generator index out of range");
    sys->act(*it, v);
  }
  return from_chamber(std::move(sys), std::move(v));
}

CoxeterElement CoxeterElement::parse(SystemPtr sys, const std::string& text) {
  if (text == "e" || text.empty()) return identity(std::move(sys));
  std::vector<int> word;
  for (long long label : parse_int_list(text)) word.push_back(sys->generator_for_label(label));
  return from_word(std::move(sys), word);
}

CoxeterElement CoxeterElement::inverse() const {
  std::vector<int> rev(word_.rbegin(), word_.rend());
  return from_word(sys_, rev);
}

CoxeterElement CoxeterElement::left_multiply(int i) const {
  IntVec v = chamber_;
  sys_->act(i, v);
  return from_chamber(sys_, std::move(v));
}

CoxeterElement CoxeterElement::right_multiply(int i) const {
  std::vector<int> w = word_;
  w.push_back(i);
  return from_word(sys_, w);
}

std::vector<int> CoxeterElement::label_word() const {
  std::vector<int> out;
  for (int g : word_) out.push_back(sys_->label(g));
  return out;
}

std::string CoxeterElement::to_string() const {
  if (word_.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word_.size(); ++k)
    s += (k ? "," : "") + std::to_string(sys_->label(word_[k]));
  return s;
}

CoxeterElement operator*(const CoxeterElement& a, const CoxeterElement& b) {
  if (a.sys_ != b.sys_) throw DomainError("cannot multiply elements of different Coxeter systems");
  IntVec v = b.chamber_;
  for (auto it = a.word_.rbegin(); it != a.word_.rend(); ++it) a.sys_->act(*it, v);
  return CoxeterElement::from_chamber(a.sys_, std::move(v));
}

std::size_t CoxeterElementHash::operator()(const CoxeterElement& w) const {
  return hash_vec(w.chamber());
}

bool bruhat_leq(const CoxeterElement& y, const CoxeterElement& w) {
  if (y.system() != w.system()) throw DomainError("Bruhat comparison across different systems");
  CoxeterElement a = y, b = w;
  while (true) {
    if (a.length() > b.length()) return false;
    if (b.is_identity()) return a.is_identity();
    if (a.is_identity()) return true;
    const int s = b.word().front();  // smallest left descent
    b = b.left_multiply(s);
    if (a.is_left_descent(s)) a = a.left_multiply(s);
  }
}

std::vector<CoxeterElement> enumerate_elements(const SystemPtr& sys, int max_length) {
  if (!sys->is_finite() && max_length < 0)
    throw DomainError("enumeration of an infinite Coxeter group needs a length bound");
  std::vector<CoxeterElement> all{CoxeterElement::identity(sys)};
  std::unordered_map<IntVec, int, std::function<std::size_t(const IntVec&)>> seen(64, hash_vec);
  seen.emplace(all[0].chamber(), 0);
  std::size_t level_begin = 0;
  for (int len = 0; max_length < 0 || len < max_length; ++len) {
    const std::size_t level_end = all.size();
    if (level_begin == level_end) break;
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (int i = 0; i < sys->rank(); ++i) {
        if (all[k].is_left_descent(i)) continue;
        CoxeterElement next = all[k].left_multiply(i);
        if (seen.emplace(next.chamber(), static_cast<int>(all.size())).second)
          all.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<CoxeterElement> affine_elements_up_to(const SystemPtr& sys_hat, int max_length) {
  if (sys_hat->kind() != CoxeterSystem::Kind::Affine)
    throw DomainError("affine_elements_up_to needs an affine system");
  if (max_length < 0) throw DomainError("length bound must be nonnegative");
  return enumerate_elements(sys_hat, max_length);
}

bool in_parabolic_quotient(const CoxeterElement& w, const std::vector<int>& J) {
  for (int j : J)
    if (w.is_right_descent(j)) return false;
  return true;
}

std::vector<CoxeterElement> parabolic_quotient(const SystemPtr& sys, const std::vector<int>& J,
                                               int max_length) {
  for (int j : J)
    if (j < 0 || j >= sys->rank()) throw DomainError("parabolic subset index out of range");
  std::vector<CoxeterElement> out;
  for (auto& w : enumerate_elements(sys, max_length))
    if (in_parabolic_quotient(w, J)) out.push_back(std::move(w));
  return out;
}

CoxeterElement min_coset_rep(CoxeterElement w, const std::vector<int>& J) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : J)
      if (w.is_right_descent(j)) {
        w = w.right_multiply(j);
        changed = true;
        break;
      }
  }
  return w;
}

CoxeterElement min_double_coset_rep(CoxeterElement w, const std::vector<int>& K,
                                    const std::vector<int>& J) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k : K)
      if (w.is_left_descent(k)) {
        w = w.left_multiply(k);
        changed = true;
      }
    for (int j : J)
      if (w.is_right_descent(j)) {
        w = w.right_multiply(j);
        changed = true;
      }
  }
  return w;
}

std::pair<CoxeterElement, CoxeterElement> parabolic_factor(const CoxeterElement& w,
                                                           const std::vector<int>& J) {
  CoxeterElement u = min_coset_rep(w, J);
  return {u, u.inverse() * w};
}

CoxeterElement longest_element(const SystemPtr& sys, const std::vector<int>& J) {
  CoxeterElement w = CoxeterElement::identity(sys);
  const int guard = 4096;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : J)
      if (!w.is_right_descent(j)) {
        w = w.right_multiply(j);
        changed = true;
      }
    if (w.length() > guard) throw DomainError("parabolic subgroup is infinite");
  }
  return w;
}

std::vector<int> all_generators(const SystemPtr& sys) {
  std::vector<int> g(sys->rank());
  for (int i = 0; i < sys->rank(); ++i) g[i] = i;
  return g;
}

ElementTable::ElementTable(SystemPtr sys, int max_length)
    : sys_(std::move(sys)), max_length_(max_length), index_(64, hash_vec) {
  elements_ = enumerate_elements(sys_, max_length);
  const int n = static_cast<int>(elements_.size());
  for (int k = 0; k < n; ++k) index_.emplace(elements_[k].chamber(), k);
  left_.assign(sys_->rank(), std::vector<int>(n, -1));
  first_descent_.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    if (!elements_[k].is_identity()) first_descent_[k] = elements_[k].word().front();
    for (int i = 0; i < sys_->rank(); ++i) {
      IntVec v = elements_[k].chamber();
      sys_->act(i, v);
      auto it = index_.find(v);
      if (it != index_.end()) left_[i][k] = it->second;
    }
  }
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  lower_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (int w = 0; w < n; ++w) {
    auto& bits = lower_[w];
    if (elements_[w].is_identity()) {
      bits[static_cast<std::size_t>(w) >> 6] |= 1ULL << (w & 63);
      continue;
    }
    const int s = first_descent_[w];
    const int v = left_[s][w];
    bits = lower_[v];
    for (int x = 0; x < n; ++x) {
      if (!leq(x, v)) continue;
      const int sx = left_[s][x];
      bits[static_cast<std::size_t>(sx) >> 6] |= 1ULL << (sx & 63);
    }
  }
}

std::optional<int> ElementTable::find(const CoxeterElement& w) const {
  if (w.system() != sys_) return std::nullopt;
  auto it = index_.find(w.chamber());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int ElementTable::id_of(const CoxeterElement& w) const {
  auto id = find(w);
  if (!id) throw DomainError("element " + w.to_string() + " is outside the enumerated range");
  return *id;
}

std::vector<int> ElementTable::lower_interval(int w) const {
  std::vector<int> out;
  for (int y = 0; y < static_cast<int>(size()); ++y)
    if (leq(y, w)) out.push_back(y);
  return out;
}

}  // namespace endokl
