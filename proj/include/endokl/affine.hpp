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

#pragma once

#include "endokl/endoscopy.hpp"
#include "endokl/klpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace endokl {

enum class LevelClass { Positive, Negative, Critical };
std::string to_string(LevelClass c);

/// One-parameter subgroup c -> (c^a, mu(c), c^b). Finite part mu/a, level -b/a.
struct AffineCoweight {
  IntVec mu;
  long long a = 1;
  long long b = 0;

  RatVec finite() const;
  Rational level() const;
  std::string to_string() const;
};

/// ab < 0 positive, ab > 0 negative, b = 0 critical; a = 0 with b != 0 is
/// rejected, as is (0, 0).
LevelClass classify_level(const AffineCoweight& x);

/// Real affine root beta + m delta.
struct AffineRoot {
  IntVec root;
  long long m = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

/// fin + kc K + level d, with K central and <d, delta> = 1.
struct AffineVec {
  RatVec fin;
  Rational kc = 0;
  Rational level = 0;
  friend bool operator==(const AffineVec&, const AffineVec&) = default;
};

Rational affine_pairing(const RootDatum& datum, const AffineVec& x, const AffineRoot& beta);
AffineVec affine_reflect(const RootDatum& datum, const AffineRoot& beta, AffineVec x);
/// Level-zero integral vector in the basis alpha_0^vee, alpha_1^vee, ..., alpha_r^vee.
IntVec affine_coroot_coordinates(const RootDatum& datum, const AffineVec& v);

struct AffineStratificationDatum {
  RootDatum datum;
  AffineCoweight x;
  LevelClass level = LevelClass::Positive;
  /// Smallest N > 0 with N * level integral.
  long long period = 1;
  std::vector<AffineRoot> simples;
  SystemPtr zeta_system;
  std::vector<int> J;
  /// Dominant (positive level) or antidominant (negative level) conjugate.
  AffineVec lambda_prime;
  CoxeterElement y;
  /// Critical level: the finite endoscopy of the finite part.
  std::optional<StratificationDatum> finite;

  AffineVec act(const CoxeterElement& w, AffineVec v) const;
  /// lambda' - w lambda' (positive level) or w lambda' - lambda' (negative
  /// level) in affine coroot coordinates.
  IntVec difference(const CoxeterElement& w) const;
};

AffineStratificationDatum affine_endoscopy(const RootDatum& datum, const AffineCoweight& x);

/// Labels w in the quotient by W_J (and minimal in W_K w when K is given)
/// whose difference is <= bound. Critical level is rejected. Enumeration past
/// max_length is rejected.
std::vector<CoxeterElement> affine_strata_index(const AffineStratificationDatum& sd,
                                                const IntVec& bound,
                                                const std::vector<int>& K = {},
                                                int max_length = 64);

struct CriticalStratum {
  CoxeterElement w;
  IntVec alpha;
};

/// Pairs (w, alpha) with lambda' - w lambda' = beta_fin and (alpha, lambda') =
/// beta_delta, alpha in the span of the coroots of I \ J.
std::vector<CriticalStratum> critical_strata_index(const AffineStratificationDatum& sd,
                                                   const IntVec& beta_fin, long long beta_delta);

/// Total stalk dimensions over the labels: P_{w w_J, y w_J}(1) at positive
/// level, |Q_{y,w}(1)| at negative level, computed on a length-bounded table.
IntMatrix affine_multiplicities(const AffineStratificationDatum& sd,
                                const std::vector<CoxeterElement>& labels,
                                std::shared_ptr<KLCache> cache = nullptr);

/// Affine Weyl group element as t_translation * finite.
struct AffineElement {
  CoxeterElement word;
  CoxeterElement finite;
  IntVec translation;
};

/// t_mu in the affine Weyl group of `datum` (sys must be its affinization).
CoxeterElement translation_element(const SystemPtr& sys, const RootDatum& datum, const IntVec& mu);
AffineElement decompose(const RootDatum& datum, const CoxeterElement& w);
/// Number of affine hyperplanes separating the fundamental alcove from its image.
long long geometric_length(const RootDatum& datum, const CoxeterElement& w);

}  // namespace endokl
