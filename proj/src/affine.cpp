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

#include "endokl/affine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace endokl {

namespace {

IntVec negate(IntVec v) {
  for (auto& x : v) x = -x;
  return v;
}

bool is_positive_root(const IntVec& v) {
  return std::any_of(v.begin(), v.end(), [](long long c) { return c > 0; });
}

bool is_positive(const AffineRoot& b) { return b.m > 0 || (b.m == 0 && is_positive_root(b.root)); }

// Coroot of an arbitrary finite root, positive or negative.
IntVec finite_coroot(const RootDatum& d, const IntVec& root) {
  for (const Root& r : d.positive_roots()) {
    if (r.root == root) return r.coroot;
    if (negate(r.root) == root) return negate(r.coroot);
  }
  throw DomainError("vector " + format_vector(root) + " is not a root");
}

// All finite roots, positive then negative, in datum order.
std::vector<IntVec> finite_roots(const RootDatum& d) {
  std::vector<IntVec> out;
  for (const Root& r : d.positive_roots()) out.push_back(r.root);
  for (const Root& r : d.positive_roots()) out.push_back(negate(r.root));
  return out;
}

void check_rank(const RootDatum& d, const IntVec& v, const char* what) {
  if (static_cast<int>(v.size()) != d.rank())
    throw DomainError(std::string(what) + " has " + std::to_string(v.size()) +
                      " entries, rank is " + std::to_string(d.rank()));
}

// Chamber point of the fundamental alcove: <p, alpha_i> = 1/h for every i.
RatVec alcove_point(const RootDatum& d) {
  const Root& theta = d.positive_roots()[d.highest_root_index()];
  const long long h = height(theta.root) + 1;
  std::vector<RatVec> m(d.rank(), RatVec(d.rank()));
  for (int i = 0; i < d.rank(); ++i)
    for (int k = 0; k < d.rank(); ++k) m[i][k] = d.cartan()[k][i];
  return solve_rational(m, RatVec(d.rank(), Rational(1, h)));
}

// Affine Weyl group action on level-one points (generator 0: reflection in
// the hyperplane <x, theta> = 1).
RatVec act_point(const RootDatum& d, int i, RatVec x) {
  if (i > 0) return d.reflect(i - 1, std::move(x));
  const Root& theta = d.positive_roots()[d.highest_root_index()];
  x = d.reflect(theta, std::move(x));
  for (int k = 0; k < d.rank(); ++k) x[k] += theta.coroot[k];
  return x;
}

RatVec act_point(const RootDatum& d, const CoxeterElement& w, RatVec x) {
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = act_point(d, *it, std::move(x));
  return x;
}

void check_affinization(const SystemPtr& sys, const RootDatum& d) {
  if (sys->kind() != CoxeterSystem::Kind::Affine || sys->rank() != d.rank() + 1 ||
      sys->cartan() != CoxeterSystem::affine_weyl(d)->cartan())
    throw DomainError("system " + sys->name() + " is not the affine Weyl group of " + d.name());
}

Rational floor_rational(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return Rational(q);
}

}  // namespace

std::string to_string(LevelClass c) {
  switch (c) {
    case LevelClass::Positive: return "positive";
    case LevelClass::Negative: return "negative";
    case LevelClass::Critical: return "critical";
  }
  return "";
}

RatVec AffineCoweight::finite() const {
  if (a == 0) throw DomainError("loop rotation exponent a = 0 has no finite part");
  RatVec out;
  for (auto c : mu) out.emplace_back(c, a);
  return out;
}

Rational AffineCoweight::level() const {
  if (a == 0) throw DomainError("loop rotation exponent a = 0 has no level");
  return Rational(-b, a);
}

std::string AffineCoweight::to_string() const {
  return "(" + format_vector(mu) + "; a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")";
}

LevelClass classify_level(const AffineCoweight& x) {
  if (x.a == 0 && x.b == 0) throw DomainError("a = b = 0 does not define a loop rotation");
  if (x.a == 0) throw DomainError("a = 0 with b != 0 is not supported");
  if (x.b == 0) return LevelClass::Critical;
  return (x.a > 0) != (x.b > 0) ? LevelClass::Positive : LevelClass::Negative;
}

Rational affine_pairing(const RootDatum& datum, const AffineVec& x, const AffineRoot& beta) {
  return datum.pairing(x.fin, beta.root) + Rational(beta.m) * x.level;
}

AffineVec affine_reflect(const RootDatum& datum, const AffineRoot& beta, AffineVec x) {
  const Rational p = affine_pairing(datum, x, beta);
  const IntVec cor = finite_coroot(datum, beta.root);
  for (std::size_t k = 0; k < x.fin.size(); ++k) x.fin[k] -= p * cor[k];
  x.kc -= p * Rational(2 * beta.m) / datum.root_norm(beta.root);
  return x;
}

IntVec affine_coroot_coordinates(const RootDatum& datum, const AffineVec& v) {
  if (v.level != 0) throw DomainError("affine coroot coordinates need a level-zero vector");
  const Root& theta = datum.positive_roots()[datum.highest_root_index()];
  RatVec c(datum.rank() + 1);
  c[0] = v.kc;
  for (int i = 0; i < datum.rank(); ++i) c[i + 1] = v.fin[i] + v.kc * theta.coroot[i];
  return to_integral(c);
}

AffineVec AffineStratificationDatum::act(const CoxeterElement& w, AffineVec v) const {
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    v = affine_reflect(datum, simples[*it], std::move(v));
  return v;
}

IntVec AffineStratificationDatum::difference(const CoxeterElement& w) const {
  const AffineVec wl = act(w, lambda_prime);
  AffineVec d{RatVec(wl.fin.size()), lambda_prime.kc - wl.kc, 0};
  for (std::size_t k = 0; k < d.fin.size(); ++k) d.fin[k] = lambda_prime.fin[k] - wl.fin[k];
  if (level == LevelClass::Negative) {
    for (auto& c : d.fin) c = -c;
    d.kc = -d.kc;
  }
  return affine_coroot_coordinates(datum, d);
}

AffineStratificationDatum affine_endoscopy(const RootDatum& datum, const AffineCoweight& x) {
  check_rank(datum, x.mu, "coweight");
  AffineStratificationDatum sd;
  sd.datum = datum;
  sd.x = x;
  sd.level = classify_level(x);
  const Rational k = x.level();
  sd.period = k.denominator();
  const AffineVec lambda{x.finite(), 0, k};

  auto integral = [&](const AffineRoot& b) { return is_integral(affine_pairing(datum, lambda, b)); };
  std::vector<AffineRoot> candidates;
  for (long long m = 0; m <= sd.period; ++m)
    for (const IntVec& r : finite_roots(datum)) {
      AffineRoot b{r, m};
      if (is_positive(b) && integral(b)) candidates.push_back(b);
    }
  // beta is simple iff s_beta keeps every other positive integral root positive.
  // A root gamma + n delta can only turn negative when n <= 3m.
  for (const AffineRoot& b : candidates) {
    const IntVec bc = finite_coroot(datum, b.root);
    bool simple = true;
    for (long long n = 0; n <= 3 * b.m && simple; ++n)
      for (const IntVec& g : finite_roots(datum)) {
        AffineRoot gamma{g, n};
        if (gamma == b || !is_positive(gamma) || !integral(gamma)) continue;
        const long long c = datum.pairing(bc, g);
        IntVec img = g;
        for (std::size_t i = 0; i < img.size(); ++i) img[i] -= c * b.root[i];
        if (!is_positive(AffineRoot{img, n - c * b.m})) {
          simple = false;
          break;
        }
      }
    if (simple) sd.simples.push_back(b);
  }

  const int r = datum.rank();
  std::vector<AffineRoot> standard{{negate(datum.positive_roots()[datum.highest_root_index()].root), 1}};
  for (int i = 0; i < r; ++i) standard.push_back({datum.simple(i).root, 0});
  const bool is_standard =
      sd.simples.size() == standard.size() &&
      std::all_of(standard.begin(), standard.end(), [&](const AffineRoot& s) {
        return std::find(sd.simples.begin(), sd.simples.end(), s) != sd.simples.end();
      });
  if (is_standard) {
    sd.simples = standard;
    sd.zeta_system = CoxeterSystem::affine_weyl(datum);
  } else {
    const int n = static_cast<int>(sd.simples.size());
    IntMatrix gcm(n, IntVec(n));
    for (int i = 0; i < n; ++i) {
      const IntVec ci = finite_coroot(datum, sd.simples[i].root);
      for (int j = 0; j < n; ++j) gcm[i][j] = datum.pairing(ci, sd.simples[j].root);
    }
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    sd.zeta_system = CoxeterSystem::create(gcm, n == 0 ? "trivial" : "affine",
                                           n == 0 ? CoxeterSystem::Kind::Finite
                                                  : CoxeterSystem::Kind::Affine,
                                           labels);
  }

  if (sd.level == LevelClass::Critical) {
    sd.finite = stratification_datum(datum, RationalCoweight(x.mu, x.a));
    sd.lambda_prime = AffineVec{sd.finite->lambda_prime, 0, 0};
    sd.y = CoxeterElement::identity(sd.zeta_system);
    return sd;
  }

  // lambda = s_{i1} ... s_{im} lambda'; climbing terminates since the stabilizer
  // of a non-critical level is finite.
  const int sign = sd.level == LevelClass::Positive ? 1 : -1;
  AffineVec v = lambda;
  std::vector<int> word;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < sd.simples.size(); ++i)
      if (sign * affine_pairing(datum, v, sd.simples[i]) < 0) {
        v = affine_reflect(datum, sd.simples[i], std::move(v));
        word.push_back(static_cast<int>(i));
        moved = true;
        break;
      }
    if (word.size() > 100000) throw DomainError("conjugation to the dominant chamber did not terminate");
  }
  sd.lambda_prime = v;
  for (std::size_t i = 0; i < sd.simples.size(); ++i)
    if (affine_pairing(datum, v, sd.simples[i]) == 0) sd.J.push_back(static_cast<int>(i));
  sd.y = min_coset_rep(CoxeterElement::from_word(sd.zeta_system, word), sd.J);
  return sd;
}

std::vector<CoxeterElement> affine_strata_index(const AffineStratificationDatum& sd,
                                                const IntVec& bound, const std::vector<int>& K,
                                                int max_length) {
  if (sd.level == LevelClass::Critical)
    throw DomainError("critical level strata are indexed by pairs; use the critical index");
  if (static_cast<int>(bound.size()) != sd.datum.rank() + 1)
    throw DomainError("bound needs " + std::to_string(sd.datum.rank() + 1) +
                      " entries (alpha_0^vee first)");
  for (int s : K)
    if (s < 0 || s >= sd.zeta_system->rank()) throw DomainError("parabolic K is out of range");
  auto within = [&](const CoxeterElement& w) {
    return RootDatum::dominance_leq(sd.difference(w), bound);
  };
  const CoxeterElement e = CoxeterElement::identity(sd.zeta_system);
  std::unordered_set<CoxeterElement, CoxeterElementHash> seen{e};
  std::vector<CoxeterElement> queue{e};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const CoxeterElement u = queue[head];
    for (int s = 0; s < sd.zeta_system->rank(); ++s) {
      if (u.is_left_descent(s)) continue;
      CoxeterElement v = u.left_multiply(s);
      if (!in_parabolic_quotient(v, sd.J) || seen.count(v) || !within(v)) continue;
      if (v.length() > max_length)
        throw DomainError("strata below bound " + format_vector(bound) + " exceed length " +
                          std::to_string(max_length));
      seen.insert(v);
      queue.push_back(v);
    }
  }
  std::vector<CoxeterElement> out;
  for (const auto& w : queue)
    if (std::none_of(K.begin(), K.end(), [&](int s) { return w.is_left_descent(s); }))
      out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CriticalStratum> critical_strata_index(const AffineStratificationDatum& sd,
                                                   const IntVec& beta_fin, long long beta_delta) {
  if (sd.level != LevelClass::Critical || !sd.finite)
    throw DomainError("pairs (w, alpha) index strata only at critical level");
  const StratificationDatum& fin = *sd.finite;
  check_rank(sd.datum, beta_fin, "degree");
  std::vector<IntVec> gens;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < fin.simples.size(); ++i) {
    if (std::find(fin.J.begin(), fin.J.end(), static_cast<int>(i)) != fin.J.end()) continue;
    gens.push_back(fin.simples[i].coroot);
    weights.push_back(sd.datum.coweight_form(to_rational(gens.back()), fin.lambda_prime));
  }
  // Nonnegative combinations with (alpha, lambda') = beta_delta; each weight is positive.
  std::vector<IntVec> alphas;
  IntVec coeff(gens.size(), 0);
  auto search = [&](auto&& self, std::size_t i, Rational rest) -> void {
    if (i == gens.size()) {
      if (rest == 0) {
        IntVec a(sd.datum.rank(), 0);
        for (std::size_t g = 0; g < gens.size(); ++g)
          for (std::size_t k = 0; k < a.size(); ++k) a[k] += coeff[g] * gens[g][k];
        alphas.push_back(a);
      }
      return;
    }
    for (coeff[i] = 0; Rational(coeff[i]) * weights[i] <= rest; ++coeff[i])
      self(self, i + 1, rest - Rational(coeff[i]) * weights[i]);
    coeff[i] = 0;
  };
  if (beta_delta >= 0) search(search, 0, Rational(beta_delta));
  std::sort(alphas.begin(), alphas.end());

  std::vector<CriticalStratum> out;
  for (const auto& w : fin.index_set) {
    RatVec wl = fin.act(w, fin.lambda_prime);
    RatVec diff(wl.size());
    for (std::size_t k = 0; k < wl.size(); ++k) diff[k] = fin.lambda_prime[k] - wl[k];
    if (to_integral(diff) != beta_fin) continue;
    for (const auto& a : alphas) out.push_back({w, a});
  }
  return out;
}

IntMatrix affine_multiplicities(const AffineStratificationDatum& sd,
                                const std::vector<CoxeterElement>& labels,
                                std::shared_ptr<KLCache> cache) {
  if (sd.level == LevelClass::Critical)
    throw DomainError("stalk dimensions are not defined at critical level");
  const CoxeterElement wJ = longest_element(sd.zeta_system, sd.J);
  int max_len = 0;
  for (const auto& w : labels) max_len = std::max(max_len, w.length() + wJ.length());
  auto table = std::make_shared<const ElementTable>(sd.zeta_system, max_len);
  KLEngine kl(table, std::move(cache));
  const std::size_t n = labels.size();
  IntMatrix out(n, IntVec(n, 0));
  if (sd.level == LevelClass::Positive) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out[i][j] = kl.total_dimension(labels[i] * wJ, labels[j] * wJ);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto q = kl.inverse_row(labels[i]);
    for (std::size_t j = 0; j < n; ++j) {
      auto it = q.find(labels[j]);
      if (it != q.end()) out[i][j] = std::abs(it->second);
    }
  }
  return out;
}

CoxeterElement translation_element(const SystemPtr& sys, const RootDatum& datum, const IntVec& mu) {
  check_affinization(sys, datum);
  check_rank(datum, mu, "translation");
  const Root& theta = datum.positive_roots()[datum.highest_root_index()];
  RatVec q = alcove_point(datum);
  for (int k = 0; k < datum.rank(); ++k) q[k] += mu[k];
  // Fold q back into the alcove; the recorded word w has w(q) = p, so t_mu = w^{-1}.
  std::vector<int> word;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < datum.rank(); ++i)
      if (datum.pairing(q, datum.simple(i).root) < 0) {
        q = act_point(datum, i + 1, std::move(q));
        word.push_back(i + 1);
        moved = true;
      }
    if (datum.pairing(q, theta.root) > 1) {
      q = act_point(datum, 0, std::move(q));
      word.push_back(0);
      moved = true;
    }
  }
  return CoxeterElement::from_word(sys, word);
}

AffineElement decompose(const RootDatum& datum, const CoxeterElement& w) {
  check_affinization(w.system(), datum);
  const RatVec zero(datum.rank(), Rational(0));
  const RatVec t = act_point(datum, w, zero);
  const IntVec translation = to_integral(t);
  RatVec v = act_point(datum, w, datum.rho());
  for (int k = 0; k < datum.rank(); ++k) v[k] -= t[k];
  std::vector<int> word;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < datum.rank(); ++i)
      if (datum.pairing(v, datum.simple(i).root) < 0) {
        v = datum.reflect(i, std::move(v));
        word.push_back(i);
        moved = true;
        break;
      }
  }
  return AffineElement{w, CoxeterElement::from_word(CoxeterSystem::weyl(datum), word), translation};
}

long long geometric_length(const RootDatum& datum, const CoxeterElement& w) {
  check_affinization(w.system(), datum);
  const RatVec p = act_point(datum, w, alcove_point(datum));
  long long n = 0;
  for (const Root& b : datum.positive_roots()) {
    const Rational f = floor_rational(datum.pairing(p, b.root));
    n += std::abs(f.numerator());
  }
  return n;
}

}  // namespace endokl
