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

#include <optional>
#include <string>
#include <vector>

namespace endokl {

/// Folding of a simply-laced datum by a diagram automorphism sigma.
///
/// The invariant side has simple coroots the orbit sums of source coroots, so
/// its Cartan matrix is a_IJ = sum_{i in I} a'_ij (j in J); this is the
/// classical table A_{2n-1} -> C_n, D_{n+1} -> B_n, E6 -> F4, D4 (order 3) ->
/// G2. The dual side is its transpose.
struct FoldingDatum {
  RootDatum source;
  /// Permutation of source node indices.
  std::vector<int> sigma;
  /// Order of sigma.
  int d = 1;
  /// Orbits in order of their least node; orbit_of maps I' -> I.
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_of;
  /// d_i: orbit sizes.
  std::vector<int> d_i;
  IntMatrix invariant_cartan;
  IntMatrix dual_cartan;
  std::string invariant_type;
  std::string dual_type;
  /// A_{2n} with the order-2 flip: the orbit-summed matrix is not a Cartan
  /// matrix and no folded datum is formed.
  bool twisted = false;
  std::optional<RootDatum> invariant;
  std::optional<RootDatum> dual;
};

/// Throws DomainError if the source is not simply laced or sigma is not a
/// diagram automorphism.
FoldingDatum fold(const RootDatum& source, const std::vector<int>& sigma);

/// sigma applied to a coweight of the source: (sigma x)_{sigma(i)} = x_i.
IntVec sigma_act(const FoldingDatum& fd, const IntVec& x);

/// a(alpha) = sum over the cyclic group generated by sigma of xi(alpha).
IntVec coinvariant_map_a(const FoldingDatum& fd, const IntVec& alpha);

/// Coordinates of the coinvariant class: orbit sums of alpha.
IntVec coinvariant_class(const FoldingDatum& fd, const IntVec& alpha);

enum class UntwistClass { Untwisted, Twisted };
std::string to_string(UntwistClass c);

/// Untwisted iff the denominator of k is divisible by d; k = 0 is rejected.
UntwistClass untwist_classify(const FoldingDatum& fd, const Rational& k);

}  // namespace endokl
