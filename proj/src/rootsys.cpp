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

#include "endokl/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace endokl {

namespace {

IntMatrix zero_matrix(int n) { return IntMatrix(n, IntVec(n, 0)); }

void link(IntMatrix& a, int i, int j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

IntMatrix cartan_for(char family, int n) {
  IntMatrix a = zero_matrix(n);
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki numbering: 1-3-4-5-6(-7-8), 2 attached to 4.
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2);
      link(a, 2, 3);
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
    default:
      break;
  }
  return a;
}

bool valid_family_rank(char family, int n) {
  switch (family) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

bool is_positive(const IntVec& v) {
  bool nonzero = false;
  for (auto x : v) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

}  // namespace

RationalCoweight::RationalCoweight(IntVec mu_, long long n_) : mu(std::move(mu_)), n(n_) {
  if (n < 1) throw DomainError("coweight denominator must be a positive integer");
}

RatVec RationalCoweight::value() const {
  RatVec out;
  out.reserve(mu.size());
  for (auto c : mu) out.emplace_back(c, n);
  return out;
}

RationalCoweight RationalCoweight::parse(const std::string& text) {
  auto slash = text.find('/');
  IntVec mu = parse_int_list(text.substr(0, slash));
  long long n = 1;
  if (slash != std::string::npos) {
    IntVec den = parse_int_list(text.substr(slash + 1));
    if (den.size() != 1) throw ParseError("bad denominator in '" + text + "'");
    n = den[0];
  }
  if (n < 1) throw ParseError("denominator must be positive in '" + text + "'");
  if (mu.empty()) throw ParseError("empty coweight '" + text + "'");
  return RationalCoweight(std::move(mu), n);
}

std::string RationalCoweight::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
  return s + "/" + std::to_string(n);
}

RootDatum RootDatum::build(char family, int rank) {
  if (!valid_family_rank(family, rank))
    throw DomainError(std::string("invalid Cartan type ") + family + std::to_string(rank));
  return from_cartan(cartan_for(family, rank), std::string(1, family) + std::to_string(rank));
}

RootDatum RootDatum::build(const std::string& name) {
  if (name.size() < 2) throw DomainError("invalid Cartan type '" + name + "'");
  int rank = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') throw DomainError("invalid Cartan type '" + name + "'");
    rank = rank * 10 + (name[i] - '0');
  }
  return build(name[0], rank);
}

RootDatum RootDatum::from_cartan(IntMatrix cartan, std::string name) {
  RootDatum d;
  d.cartan_ = std::move(cartan);
  d.name_ = std::move(name);
  const int n = d.rank();
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(d.cartan_[i].size()) != n) throw DomainError("Cartan matrix is not square");
    if (d.cartan_[i][i] != 2) throw DomainError("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (d.cartan_[i][j] > 0) throw DomainError("Cartan matrix off-diagonal entries must be <= 0");
      if ((d.cartan_[i][j] == 0) != (d.cartan_[j][i] == 0))
        throw DomainError("Cartan matrix zero pattern must be symmetric");
    }
  }
  d.generate();
  return d;
}

void RootDatum::generate() {
  const int n = rank();
  // Symmetrizer by propagation along the Dynkin graph, normalized per component.
  eps_.assign(n, Rational(0));
  for (int start = 0; start < n; ++start) {
    if (eps_[start] != 0) continue;
    std::vector<int> comp{start};
    eps_[start] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      int i = comp[k];
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan_[i][j] == 0) continue;
        Rational want = eps_[i] * Rational(cartan_[i][j], cartan_[j][i]);
        if (eps_[j] == 0) {
          eps_[j] = want;
          comp.push_back(j);
        } else if (eps_[j] != want) {
          throw DomainError("Cartan matrix is not symmetrizable");
        }
      }
    }
    Rational mx = 0;
    for (int i : comp) mx = std::max(mx, eps_[i]);
    for (int i : comp) eps_[i] /= mx;
  }

  std::map<IntVec, IntVec> all;  // root -> coroot
  std::queue<IntVec> todo;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    all.emplace(e, e);
    todo.push(e);
  }
  const std::size_t limit = 512;  // E8 has 240 roots
  while (!todo.empty()) {
    IntVec beta = todo.front();
    todo.pop();
    IntVec cobeta = all.at(beta);
    for (int i = 0; i < n; ++i) {
      long long c = 0, cc = 0;
      for (int j = 0; j < n; ++j) {
        c += beta[j] * cartan_[i][j];
        cc += cobeta[j] * cartan_[j][i];
      }
      IntVec r = beta, cr = cobeta;
      r[i] -= c;
      cr[i] -= cc;
      if (all.emplace(r, cr).second) {
        if (all.size() > limit) throw DomainError("Cartan matrix is not of finite type");
        todo.push(r);
      }
    }
  }
  positive_.clear();
  for (const auto& [r, cr] : all)
    if (is_positive(r)) positive_.push_back(Root{r, cr});
  std::stable_sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    long long ha = height(a.root), hb = height(b.root);
    if (ha != hb) return ha < hb;
    return a.root > b.root;
  });
  simple_index_.assign(n, -1);
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    if (height(positive_[k].root) != 1) continue;
    for (int i = 0; i < n; ++i)
      if (positive_[k].root[i] == 1) simple_index_[i] = static_cast<int>(k);
  }
  highest_ = static_cast<int>(positive_.size()) - 1;
}

RatVec RootDatum::rho() const {
  RatVec r(rank(), Rational(0));
  for (const auto& p : positive_)
    for (int i = 0; i < rank(); ++i) r[i] += Rational(p.coroot[i], 2);
  return r;
}

RootDatum RootDatum::dual() const {
  IntMatrix t = zero_matrix(rank());
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) t[i][j] = cartan_[j][i];
  std::string nm = identify_cartan_type(t);
  if (nm.empty()) nm = name_ + "^vee";
  return from_cartan(std::move(t), nm);
}

Rational RootDatum::pairing(const RatVec& x, const IntVec& root) const {
  if (x.size() != root.size() || static_cast<int>(x.size()) != rank())
    throw DomainError("pairing: dimension mismatch");
  Rational s = 0;
  for (int j = 0; j < rank(); ++j) {
    if (x[j] == 0) continue;
    long long t = 0;
    for (int k = 0; k < rank(); ++k) t += root[k] * cartan_[j][k];
    s += x[j] * t;
  }
  return s;
}

long long RootDatum::pairing(const IntVec& x, const IntVec& root) const {
  if (x.size() != root.size() || static_cast<int>(x.size()) != rank())
    throw DomainError("pairing: dimension mismatch");
  long long s = 0;
  for (int j = 0; j < rank(); ++j)
    for (int k = 0; k < rank(); ++k) s += x[j] * root[k] * cartan_[j][k];
  return s;
}

Rational RootDatum::pairing(const Root& alpha, const RationalCoweight& lambda) const {
  return pairing(lambda.value(), alpha.root);
}

IntVec RootDatum::reflect(int i, IntVec v) const { return reflect(simple(i), std::move(v)); }

RatVec RootDatum::reflect(int i, RatVec v) const { return reflect(simple(i), std::move(v)); }

RatVec RootDatum::reflect(const Root& alpha, RatVec v) const {
  Rational p = pairing(v, alpha.root);
  for (int j = 0; j < rank(); ++j) v[j] -= p * alpha.coroot[j];
  return v;
}

IntVec RootDatum::reflect(const Root& alpha, IntVec v) const {
  long long p = pairing(v, alpha.root);
  for (int j = 0; j < rank(); ++j) v[j] -= p * alpha.coroot[j];
  return v;
}

bool RootDatum::dominance_leq(const IntVec& beta, const IntVec& alpha) {
  if (beta.size() != alpha.size()) throw DomainError("dominance: dimension mismatch");
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (alpha[i] - beta[i] < 0) return false;
  return true;
}

Rational RootDatum::root_norm(const IntVec& root) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (root[i] && root[j]) s += eps_[i] * cartan_[i][j] * root[i] * root[j];
  return s;
}

Rational RootDatum::coweight_form(const RatVec& x, const RatVec& y) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (x[i] != 0 && y[j] != 0) s += x[i] * y[j] * cartan_[i][j] / eps_[j];
  return s;
}

long long RootDatum::weyl_order() const {
  auto fact = [](long long k) {
    long long f = 1;
    for (long long i = 2; i <= k; ++i) f *= i;
    return f;
  };
  const int n = rank();
  switch (family()) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (1LL << n) * fact(n);
    case 'D': return (1LL << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
    default: throw DomainError("weyl_order: unnamed type " + name_);
  }
}

long long height(const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0LL); }

namespace {

bool matches_under_permutation(const IntMatrix& a, const IntMatrix& b) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto degree_profile = [](const IntMatrix& m) {
    std::vector<long long> d;
    for (const auto& row : m) d.push_back(std::accumulate(row.begin(), row.end(), 0LL));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degree_profile(a) != degree_profile(b)) return false;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (a[perm[i]][perm[j]] != b[i][j]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string identify_connected(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  for (char f : std::string("ABCDEFG")) {
    if (!valid_family_rank(f, n)) continue;
    if ((f == 'C' && n == 2)) continue;  // report the rank-2 case as B2
    if (matches_under_permutation(a, cartan_for(f, n)))
      return std::string(1, f) + std::to_string(n);
  }
  return "";
}

}  // namespace

std::string identify_cartan_type(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.size());
  if (n == 0) return "trivial";
  std::vector<int> comp(n, -1);
  std::vector<std::string> names;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes{s};
    comp[s] = s;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && cartan[nodes[k]][j] != 0) {
          comp[j] = s;
          nodes.push_back(j);
        }
    std::sort(nodes.begin(), nodes.end());
    IntMatrix sub(nodes.size(), IntVec(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j) sub[i][j] = cartan[nodes[i]][nodes[j]];
    std::string nm = identify_connected(sub);
    if (nm.empty()) return "";
    names.push_back(nm);
  }
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "x" : "") + names[i];
  return out;
}

}  // namespace endokl
