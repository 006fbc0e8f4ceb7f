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
#include "endokl/oracle.hpp"

#include <map>
#include <memory>
#include <vector>

namespace endokl {

/// [M(w lambda' - rho) : L(y lambda' - rho)] over the strata labels.
struct MultiplicityMatrix {
  StratificationDatum sd;
  std::vector<CoxeterElement> labels;
  std::vector<std::vector<bool>> order;
  /// entries[i][j] for (w, y) = (labels[i], labels[j]).
  IntMatrix entries;
};

/// Entries keyed by the highest weights of the Verma and simple modules.
WeightKeyedMatrix weight_keyed(const MultiplicityMatrix& mm);

/// Highest weight w lambda' - rho of the Verma module labelled w.
RatVec highest_weight(const StratificationDatum& sd, const CoxeterElement& w);

/// KL data inside the endoscopic group, shared between queries on one datum.
class MultiplicityEngine {
 public:
  explicit MultiplicityEngine(const StratificationDatum& sd, std::shared_ptr<KLCache> cache = nullptr);

  const StratificationDatum& datum() const { return sd_; }
  KLEngine& kl() { return kl_; }

  /// P_{w0 y w0J, w0 w w0J}(1); zero unless y >= w. Labels must be strata.
  long long verma_multiplicity(const CoxeterElement& w, const CoxeterElement& y);
  MultiplicityMatrix matrix(unsigned threads = 1);

 private:
  StratificationDatum sd_;
  KLEngine kl_;
  CoxeterElement w0_;
  CoxeterElement w0J_;
};

MultiplicityMatrix multiplicity_matrix(const StratificationDatum& sd,
                                       std::shared_ptr<KLCache> cache = nullptr,
                                       unsigned threads = 1);

/// Inverse of an upper unitriangular integer matrix.
IntMatrix simple_in_verma_inversion(const IntMatrix& m);

/// Graded character: alpha -> K_alpha(q).
using GradedCharacter = std::map<IntVec, Poly>;

/// K_alpha(q) for every alpha in the positive cone with height <= bound:
/// unordered partitions into positive roots of the dual, q counting parts.
GradedCharacter costalk_character(const RootDatum& datum, int degree_bound);
/// K_alpha(q) for one alpha; zero outside the cone.
Poly kostant_q(const RootDatum& datum, const IntVec& alpha);

/// Dimension of the simple module of highest weight hw over the dual algebra.
/// hw must be dominant integral.
long long weyl_dimension(const RootDatum& datum, const RatVec& hw);

/// ch L(y lambda' - rho) = sum_w inv[y][w] ch M(w lambda' - rho), as a map
/// from depth alpha (highest weight minus weight) to multiplicity, for all
/// alpha of height <= depth. Zero entries are dropped.
std::map<IntVec, long long> simple_character(const MultiplicityMatrix& mm, int label_index,
                                             int depth);

}  // namespace endokl
