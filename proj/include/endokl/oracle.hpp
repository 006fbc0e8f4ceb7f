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

#include "endokl/rootsys.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace endokl {

using BigRational = boost::multiprecision::cpp_rational;
using BigMatrix = std::vector<std::vector<BigRational>>;

/// Weight spaces of U(n^-) for the dual algebra up to a height bound, as
/// spans of f_j applied to lower basis vectors. Independent of any highest
/// weight: relations are detected at a generic weight, where the Verma
/// module is simple.
class VermaStructure {
 public:
  VermaStructure(const RootDatum& datum, int depth);

  const RootDatum& datum() const { return datum_; }
  int depth() const { return depth_; }
  /// Depths alpha in the positive cone with height <= depth, by height.
  const std::vector<IntVec>& depths() const { return order_; }
  int dim(const IntVec& alpha) const;

  struct Level {
    int dim = 0;
    /// Basis vector k is f_{src[k].first} applied to basis vector
    /// src[k].second one step higher.
    std::vector<std::pair<int, int>> src;
    /// f[j]: coordinates of f_j on the level alpha - e_j (empty if absent).
    std::vector<BigMatrix> f;
  };
  const Level* level(const IntVec& alpha) const;

  /// e_i matrices (rows: alpha - e_i, columns: alpha) for highest weight hw,
  /// computed for every depth.
  std::map<IntVec, std::vector<BigMatrix>> raising(const RatVec& hw) const;

 private:
  void extend(const IntVec& alpha, const RatVec& generic,
              std::map<IntVec, std::vector<BigMatrix>>& e);
  std::vector<std::vector<BigRational>> raise_candidate(
      const IntVec& alpha, int j, int b, const RatVec& hw,
      const std::map<IntVec, std::vector<BigMatrix>>& e) const;

  RootDatum datum_;
  int depth_;
  std::vector<IntVec> order_;
  std::map<IntVec, Level> levels_;
};

/// Verma module over the dual algebra with a fixed highest weight.
class VermaModel {
 public:
  VermaModel(std::shared_ptr<const VermaStructure> structure, RatVec hw);

  const RatVec& highest_weight() const { return hw_; }
  int depth() const { return structure_->depth(); }
  int weight_dim(const IntVec& alpha) const { return structure_->dim(alpha); }
  /// Dimension of the simple quotient at depth alpha.
  int simple_dim(const IntVec& alpha) const;
  /// Dimension of the vectors killed by every e_i at depth alpha.
  int singular_dim(const IntVec& alpha) const;

 private:
  std::shared_ptr<const VermaStructure> structure_;
  RatVec hw_;
  std::map<IntVec, std::vector<BigMatrix>> e_;
  std::map<IntVec, int> simple_;
};

/// Nonzero singular-vector dimensions at depths 0 < |alpha| <= depth.
std::vector<std::pair<IntVec, int>> singular_vectors(const VermaModel& vm, int depth);

struct OracleMatrix {
  /// Highest weights w lambda - rho over the integral linkage class.
  std::vector<RatVec> weights;
  /// entries[a][b] = [M(weights[a]) : L(weights[b])].
  IntMatrix entries;
  int depth = 0;
};

/// (highest weight of M, highest weight of L) -> multiplicity, all pairs.
using WeightKeyedMatrix = std::map<std::pair<RatVec, RatVec>, long long>;
WeightKeyedMatrix weight_keyed(const OracleMatrix& om);

/// Depth needed to see every linkage-class weight (diameter plus 2).
int oracle_required_depth(const RootDatum& datum, const RationalCoweight& lambda);

/// Composition multiplicities by character peeling. depth 0 selects the
/// required depth; a smaller positive depth is rejected. Rank at most 2.
OracleMatrix oracle_multiplicity_matrix(const RootDatum& datum, const RationalCoweight& lambda,
                                        int depth = 0);

}  // namespace endokl
